#include "theta/json_io.hpp"

namespace theta {

namespace {

// Rewraps nlohmann exceptions so callers see a single error contract.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

std::vector<i64> i64_vector(const Json& j) {
  return guarded([&] { return j.get<std::vector<i64>>(); });
}

} // namespace

Json parse_json(const std::string& text) {
  return guarded([&] { return Json::parse(text); });
}

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  return guarded([&] { return rational_from_string(j.get<std::string>()); });
}

Json root_to_json(const RootOfUnity& z) {
  return Json{{"order", z.order()}, {"exp", z.exponent()}};
}

RootOfUnity root_from_json(const Json& j) {
  return guarded([&] { return RootOfUnity(j.at("order").get<i64>(), j.at("exp").get<i64>()); });
}

Json cyclo_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclo_from_json(const Json& j) {
  return guarded([&] {
    i64 order = j.at("order").get<i64>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return Cyclotomic(order, std::move(coeffs));
  });
}

Json matrix_to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycloMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    size_t rows = j.size();
    size_t cols = rows == 0 ? 0 : j.at(0).size();
    i64 order = 1;
    std::vector<std::vector<Cyclotomic>> entries;
    for (const auto& row : j) {
      entries.emplace_back();
      for (const auto& cell : row) {
        entries.back().push_back(cyclo_from_json(cell));
        order = lcm_ll(order, entries.back().back().order());
      }
      if (entries.back().size() != cols) fail(errc::parse_error, "ragged matrix");
    }
    CycloMatrix m(rows, cols, order);
    for (size_t i = 0; i < rows; ++i)
      for (size_t c = 0; c < cols; ++c) m.set(i, c, entries[i][c]);
    return m;
  });
}

Json group_to_json(const FiniteAbelianGroup& g) { return Json{{"factors", g.factors()}}; }

FiniteAbelianGroup group_from_json(const Json& j) {
  return guarded([&] { return FiniteAbelianGroup(i64_vector(j.at("factors"))); });
}

Json element_to_json(const GroupElement& x) { return Json{{"coords", x.coords()}}; }

GroupElement element_from_json(const Json& j, const FiniteAbelianGroup& parent) {
  return guarded([&] { return parent.element(i64_vector(j.at("coords"))); });
}

Json dual_to_json(const DualElement& chi) { return Json{{"coords", chi.coords()}}; }

DualElement dual_from_json(const Json& j, const FiniteAbelianGroup& parent) {
  return guarded([&] { return parent.dual_element(i64_vector(j.at("coords"))); });
}

Json hom_to_json(const GroupHom& f) {
  Json rows = Json::array();
  for (const auto& r : f.gen_images()) rows.push_back(r);
  return Json{{"matrix", rows}};
}

GroupHom hom_from_json(const Json& j, const FiniteAbelianGroup& source,
                       const FiniteAbelianGroup& target) {
  return guarded([&] {
    std::vector<std::vector<i64>> rows;
    for (const auto& r : j.at("matrix")) rows.push_back(i64_vector(r));
    return GroupHom(source, target, std::move(rows));
  });
}

Json pairing_to_json(const AlternatingPairing& e) {
  Json rows = Json::array();
  for (const auto& r : e.matrix()) rows.push_back(r);
  return Json{{"group", group_to_json(e.group())}, {"matrix", rows}};
}

AlternatingPairing pairing_from_json(const Json& j) {
  return guarded([&] {
    FiniteAbelianGroup g = group_from_json(j.at("group"));
    std::vector<std::vector<i64>> rows;
    for (const auto& r : j.at("matrix")) rows.push_back(i64_vector(r));
    return AlternatingPairing(std::move(g), std::move(rows));
  });
}

Json theta_element_to_json(const ThetaElement& t) {
  return Json{{"scalar", root_to_json(t.scalar)},
              {"x", t.x.coords()},
              {"chi", t.chi.coords()}};
}

ThetaElement theta_element_from_json(const Json& j, const FiniteAbelianGroup& k) {
  return guarded([&] {
    return ThetaElement{root_from_json(j.at("scalar")), k.element(i64_vector(j.at("x"))),
                        k.dual_element(i64_vector(j.at("chi")))};
  });
}

Json normal_form_to_json(const NormalForm& nf) {
  Json blocks = Json::array();
  for (const auto& b : nf.blocks()) blocks.push_back(Json{{"n", b.n}, {"d", b.d}});
  Json basis = Json::array();
  for (const auto& row : nf.basis_matrix()) basis.push_back(row);
  Json rad_gens = Json::array();
  for (const auto& g : nf.radical().generators) rad_gens.push_back(g.coords());
  return Json{{"blocks", blocks},
              {"basis", basis},
              {"radical", Json{{"factors", nf.radical().group.factors()},
                               {"generators", rad_gens}}}};
}

Json model_to_json(const AbelianVarietyModel& m) {
  Json ns = Json::array();
  for (const auto& e : m.ns) {
    Json rows = Json::array();
    for (const auto& r : e) rows.push_back(r);
    ns.push_back(std::move(rows));
  }
  return Json{{"g", m.g}, {"n", m.level}, {"ns", ns}};
}

AbelianVarietyModel model_from_json(const Json& j) {
  return guarded([&] {
    int g = j.at("g").get<int>();
    i64 n = j.at("n").get<i64>();
    std::vector<std::vector<std::vector<i64>>> ns;
    for (const auto& e : j.at("ns")) {
      ns.emplace_back();
      for (const auto& r : e) ns.back().push_back(i64_vector(r));
    }
    return make_model(g, n, std::move(ns));
  });
}

} // namespace theta
