#include "thetagroups.h"

#include <functional>
#include <string>

#include "theta/verify.hpp"

struct tg_result {
  int status = TG_OK;
  std::string json;
  std::string error;
  bool has_json = false;
};

namespace {

tg_result* run(const std::function<theta::Json(int&)>& body) {
  auto* r = new tg_result;
  try {
    int status = TG_OK;
    theta::Json out = body(status);
    r->status = status;
    r->json = out.dump();
    r->has_json = true;
  } catch (const theta::Error& e) {
    r->status = e.code() == theta::errc::parse_error ? TG_PARSE_ERROR : TG_INVARIANT_VIOLATION;
    r->error = e.what();
  } catch (const std::exception& e) {
    r->status = TG_INVARIANT_VIOLATION;
    r->error = e.what();
  }
  return r;
}

theta::Json parse_required(const char* text, const char* what) {
  if (text == nullptr) theta::fail(theta::errc::parse_error, std::string(what) + " is required");
  return theta::parse_json(text);
}

} // namespace

extern "C" {

tg_result* tg_classify_pairing(const char* pairing_json) {
  return run([&](int&) {
    return theta::classify_pairing_command(parse_required(pairing_json, "pairing document"));
  });
}

tg_result* tg_heisenberg(const char* group_json) {
  return run([&](int&) {
    return theta::heisenberg_command(parse_required(group_json, "group document"));
  });
}

tg_result* tg_selfdual_orbits(int max_rank) {
  return run([&](int&) { return theta::selfdual_orbits_command(max_rank); });
}

tg_result* tg_brauer(const char* model_json, const char* class_json) {
  return run([&](int&) {
    theta::Json model = parse_required(model_json, "model document");
    if (class_json == nullptr) return theta::brauer_command(model, nullptr);
    theta::Json cls = theta::parse_json(class_json);
    return theta::brauer_command(model, &cls);
  });
}

tg_result* tg_verify(const char* suite, const char* options_json) {
  return run([&](int& status) {
    if (suite == nullptr) theta::fail(theta::errc::parse_error, "suite name is required");
    theta::VerifyOptions opts;
    if (options_json != nullptr) {
      theta::Json j = theta::parse_json(options_json);
      try {
        if (j.contains("max_k")) opts.max_k = j["max_k"].get<theta::i64>();
        if (j.contains("max_rank")) opts.max_rank = j["max_rank"].get<int>();
        if (j.contains("g")) opts.g = j["g"].get<int>();
        if (j.contains("n")) opts.n = j["n"].get<theta::i64>();
        if (j.contains("seed")) opts.seed = j["seed"].get<std::uint64_t>();
      } catch (const std::exception& e) {
        theta::fail(theta::errc::parse_error, e.what());
      }
    }
    bool passed = false;
    theta::Json report = theta::verify_command(suite, opts, passed);
    status = passed ? TG_OK : TG_PROPERTY_FAILURE;
    return report;
  });
}

int tg_result_status(const tg_result* r) { return r == nullptr ? TG_INVARIANT_VIOLATION : r->status; }

const char* tg_result_json(const tg_result* r) {
  return (r == nullptr || !r->has_json) ? nullptr : r->json.c_str();
}

const char* tg_result_error(const tg_result* r) {
  return (r == nullptr || r->error.empty()) ? nullptr : r->error.c_str();
}

void tg_result_free(tg_result* r) { delete r; }

const char* tg_version(void) { return "0.1.0"; }

} // extern "C"
