// Command-line front end. Talks to the library exclusively through the
// extern-C interface in thetagroups.h.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "thetagroups.h"

namespace {

struct ResultDeleter {
  void operator()(tg_result* r) const { tg_result_free(r); }
};
using Result = std::unique_ptr<tg_result, ResultDeleter>;

std::optional<std::string> read_file(const std::string& path, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open input file '" + path + "'";
    return std::nullopt;
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Prints the report (or error) and maps the result status to an exit code.
int finish(const Result& r, const std::string& output_path) {
  int status = tg_result_status(r.get());
  const char* err = tg_result_error(r.get());
  if (err != nullptr) std::cerr << "error: " << err << "\n";
  const char* json = tg_result_json(r.get());
  if (json != nullptr) {
    if (output_path.empty()) {
      std::cout << json << "\n";
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open output file '" << output_path << "'\n";
        return 2;
      }
      out << json << "\n";
    }
  }
  return status;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite theta groups, alternating pairings "
               "and Brauer-group invariants"};
  app.require_subcommand(1);

  std::string input_path, output_path, class_path;
  long long seed = 1, max_k = 6, n = 4;
  int max_rank = 2, g = 1;

  auto add_io = [&](CLI::App* cmd, bool need_input) {
    auto* opt = cmd->add_option("--input", input_path, "input JSON file");
    if (need_input) opt->required();
    cmd->add_option("--output", output_path, "write the JSON report here (default: stdout)");
  };

  CLI::App* classify = app.add_subcommand(
      "classify-pairing", "radical, homogeneous index and Mumford normal form of a pairing");
  add_io(classify, true);

  CLI::App* heis = app.add_subcommand(
      "heisenberg", "standard representation and commutator pairing of H(K)");
  add_io(heis, true);

  CLI::App* orbits = app.add_subcommand(
      "selfdual-orbits", "orbit and sign reports for self-dual theta groups");
  orbits->add_option("--max-rank", max_rank, "largest rank to enumerate")->default_val(2);
  orbits->add_option("--output", output_path, "write the JSON report here (default: stdout)");

  CLI::App* brauer = app.add_subcommand(
      "brauer", "Brauer group of a desk model; optionally classify a class");
  add_io(brauer, true);
  brauer->add_option("--class", class_path, "pairing JSON of a Brauer class");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "heisenberg | orbits | brauer | cocycle | multiplicativity | all")
      ->required();
  verify->add_option("--max-k", max_k, "bound on |K|")->default_val(6);
  verify->add_option("--max-rank", max_rank, "bound on the symplectic rank")->default_val(2);
  verify->add_option("--g", g, "model dimension")->default_val(1);
  verify->add_option("--n", n, "model level")->default_val(4);
  verify->add_option("--seed", seed, "seed for randomized properties")->default_val(1);
  verify->add_option("--output", output_path, "write the JSON report here (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  std::string err;
  if (classify->parsed()) {
    auto text = read_file(input_path, err);
    if (!text) {
      std::cerr << "error: " << err << "\n";
      return 2;
    }
    return finish(Result(tg_classify_pairing(text->c_str())), output_path);
  }
  if (heis->parsed()) {
    auto text = read_file(input_path, err);
    if (!text) {
      std::cerr << "error: " << err << "\n";
      return 2;
    }
    return finish(Result(tg_heisenberg(text->c_str())), output_path);
  }
  if (orbits->parsed()) {
    return finish(Result(tg_selfdual_orbits(max_rank)), output_path);
  }
  if (brauer->parsed()) {
    auto text = read_file(input_path, err);
    if (!text) {
      std::cerr << "error: " << err << "\n";
      return 2;
    }
    std::optional<std::string> cls;
    if (!class_path.empty()) {
      cls = read_file(class_path, err);
      if (!cls) {
        std::cerr << "error: " << err << "\n";
        return 2;
      }
    }
    return finish(Result(tg_brauer(text->c_str(), cls ? cls->c_str() : nullptr)), output_path);
  }
  if (verify->parsed()) {
    std::ostringstream opts;
    opts << "{\"max_k\":" << max_k << ",\"max_rank\":" << max_rank << ",\"g\":" << g
         << ",\"n\":" << n << ",\"seed\":" << seed << "}";
    return finish(Result(tg_verify(suite.c_str(), opts.str().c_str())), output_path);
  }
  return 2;
}
