#include "theta/verify.hpp"

#include <set>
#include <sstream>

#include "theta/selfdual.hpp"

namespace theta {

void SuiteReport::add(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back(CheckLine{name, ok, detail});
  pass = pass && ok;
}

namespace {

std::string group_name(const FiniteAbelianGroup& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.factors().size(); ++i) os << (i ? "," : "") << g.factors()[i];
  os << ")";
  return os.str();
}

// all lifts (1, x, chi) of H = K + X(K)
std::vector<ThetaElement> h_lifts(const FiniteAbelianGroup& k, i64 scalar_order) {
  std::vector<ThetaElement> out;
  unsigned long long n = k.order_ull();
  for (unsigned long long xi = 0; xi < n; ++xi)
    for (unsigned long long ci = 0; ci < n; ++ci)
      out.push_back(
          ThetaElement{RootOfUnity::one(scalar_order), k.element_at(xi), k.dual_element_at(ci)});
  return out;
}

} // namespace

SuiteReport verify_heisenberg(i64 max_k) {
  SuiteReport report{"heisenberg", true, {}};
  for (const auto& k : abelian_groups_up_to(max_k)) {
    if (k.is_trivial()) continue;
    StandardRep rep(k);
    std::string kn = group_name(k);
    unsigned long long n = k.order_ull();

    HeisenbergPairing hp = commutator_pairing(k);
    auto lifts = h_lifts(k, rep.scalar_order());

    // commutator pairing from theta_mul equals the formula pairing
    bool comm_ok = true;
    for (const auto& a : lifts)
      for (const auto& b : lifts) {
        RootOfUnity got = theta_commutator(a, b);
        RootOfUnity expect =
            hp.pairing.value(hp.embed(a.x, a.chi), hp.embed(b.x, b.chi));
        if (got != expect) {
          comm_ok = false;
          break;
        }
      }
    report.add("commutator pairing matches group-law commutators on K=" + kn, comm_ok);

    // homomorphism property of the standard representation
    bool hom_ok = true;
    if (n <= 6) {
      for (const auto& a : lifts)
        for (const auto& b : lifts)
          if (rep.matrix(a) * rep.matrix(b) != rep.matrix(theta_mul(a, b))) {
            hom_ok = false;
            break;
          }
    } else {
      // generator lifts in both orders plus scalar twists
      std::vector<ThetaElement> gens;
      for (size_t i = 0; i < k.rank(); ++i) {
        gens.push_back(ThetaElement{RootOfUnity::one(rep.scalar_order()), k.generator(i),
                                    k.dual_zero()});
        gens.push_back(ThetaElement{RootOfUnity(rep.scalar_order(), 1), k.zero(),
                                    k.dual_generator(i)});
      }
      for (unsigned long long xi = 0; xi < n; ++xi) {
        gens.push_back(ThetaElement{RootOfUnity::one(rep.scalar_order()), k.element_at(xi),
                                    k.dual_zero()});
        gens.push_back(
            ThetaElement{RootOfUnity::one(rep.scalar_order()), k.zero(), k.dual_element_at(xi)});
      }
      for (const auto& a : gens)
        for (const auto& b : gens)
          if (rep.matrix(a) * rep.matrix(b) != rep.matrix(theta_mul(a, b))) {
            hom_ok = false;
            break;
          }
    }
    report.add("standard representation is a homomorphism on K=" + kn, hom_ok);

    // irreducibility: the lifts span the full matrix algebra
    std::vector<CycloMatrix> fam;
    fam.reserve(lifts.size());
    for (const auto& a : lifts) fam.push_back(rep.matrix(a));
    report.add("standard representation irreducible on K=" + kn,
               family_rank(fam) == n * n);

    // index consistency: homogeneous index of the pairing equals |K| = dim
    report.add("homogeneous index equals dim on K=" + kn,
               homogeneous_index(hp.pairing) == Integer(n));

    if (n <= 6) {
      // u_h structure constants and conjugation weights
      UhBasis uh = uh_basis(k);
      bool structure_ok = true;
      unsigned long long hsize = hp.h.order_ull();
      for (unsigned long long i = 0; i < hsize && structure_ok; ++i)
        for (unsigned long long j = 0; j < hsize; ++j) {
          GroupElement hi = hp.h.element_at(i), hj = hp.h.element_at(j);
          auto [x1, c1] = hp.split(hi);
          auto [x2, c2] = hp.split(hj);
          // u_{x,chi} u_{x',chi'} = chi'(x) u_{x+x', chi+chi'}
          CycloMatrix expect = uh.at(hi + hj).scaled(
              Cyclotomic::from_root(c2.eval(x1), uh.rep.scalar_order()));
          if (uh.u[i] * uh.u[j] != expect) {
            structure_ok = false;
            break;
          }
        }
      report.add("u_h structure constants on K=" + kn, structure_ok);
      report.add("u_h family is a matrix-space basis on K=" + kn,
                 family_rank(uh.u) == n * n);

      // conjugation weights realize the regular representation: the weight
      // of u_h under conjugation by lifts is e(h', h), all |H| distinct
      bool weights_ok = true;
      std::set<std::vector<i64>> seen;
      for (unsigned long long i = 0; i < hsize && weights_ok; ++i) {
        GroupElement hi = hp.h.element_at(i);
        std::vector<i64> weight;
        for (size_t gj = 0; gj < hp.h.rank(); ++gj) {
          GroupElement hgen = hp.h.generator(gj);
          CycloMatrix conj = uh.at(hgen) * uh.u[i] * uh.at(hgen).inverse();
          RootOfUnity w = hp.pairing.value(hgen, hi);
          if (conj != uh.u[i].scaled(Cyclotomic::from_root(w, uh.rep.scalar_order()))) {
            weights_ok = false;
            break;
          }
          weight.push_back(w.lifted(hp.h.exponent() == 1 ? 1 : hp.h.exponent()).exponent());
        }
        if (!seen.insert(weight).second) weights_ok = false;
      }
      report.add("u_h conjugation weights are the regular representation on K=" + kn,
                 weights_ok && seen.size() == hsize);
    }
  }
  return report;
}

SuiteReport verify_orbits(int max_rank) {
  SuiteReport report{"orbits", true, {}};
  for (int r = 1; r <= max_rank; ++r) {
    OrbitReport orbits = sp_orbits(r);
    size_t symsize = 0, altsize = 0;
    bool flags = true;
    SymplecticSpaceF2 sp(r);
    for (const auto& o : orbits.orbits) {
      (o.symmetric ? symsize : altsize) = o.size;
      for (F2Vec u : o.points) flags = flags && (sp.is_symmetric(u) == o.symmetric);
    }
    std::ostringstream os;
    os << "sizes {" << symsize << "," << altsize << "}";
    size_t esym = (1u << (2 * r - 1)) + (1u << (r - 1));
    size_t ealt = (1u << (2 * r - 1)) - (1u << (r - 1));
    report.add("rank " + std::to_string(r) + ": two orbits",
               orbits.orbits.size() == 2, os.str());
    report.add("rank " + std::to_string(r) + ": orbit sizes 2^{2r-1} +- 2^{r-1}",
               symsize == esym && altsize == ealt, os.str());
    report.add("rank " + std::to_string(r) + ": membership equals symmetric/alternating flag",
               flags);
    // every generator preserves the flag classes
    bool preserved = true;
    for (const auto& perm : sp_transvection_actions(r))
      for (F2Vec u = 0; u < sp.points(); ++u)
        preserved = preserved && (sp.is_symmetric(u) == sp.is_symmetric(perm[u]));
    report.add("rank " + std::to_string(r) + ": generators preserve symmetric characters",
               preserved);
  }
  return report;
}

SuiteReport verify_brauer(int g, i64 n) {
  SuiteReport report{"brauer", true, {}};
  // principal polarization form
  std::vector<std::vector<i64>> principal(2 * g, std::vector<i64>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    principal[i][g + i] = 1;
    principal[g + i][i] = -1;
  }
  AbelianVarietyModel model = make_model(g, n, {principal});
  BrauerGroupStructure br = brauer_group(model);
  Integer expected = integer_pow(Integer(n), static_cast<i64>(pairing_space_dim(g)));
  std::ostringstream os;
  os << "|Br| = " << br.group.order() << ", |phi| = " << br.phi_image_order;
  report.add("|Br| * |phi-image| = n^{g(2g-1)}",
             br.group.order() * br.phi_image_order == expected, os.str());
  if (g == 1)
    report.add("g=1: Brauer group trivial", br.group.is_trivial(), os.str());
  // every coset generator is killed by n
  bool killed = true;
  for (const auto& cg : br.coset_generators)
    killed = killed && pairing_power(cg, n).is_trivial();
  report.add("classes killed by n", killed);
  return report;
}

SuiteReport verify_cocycle(i64 max_h) {
  SuiteReport report{"cocycle", true, {}};
  for (const auto& h : abelian_groups_up_to(max_h)) {
    if (h.is_trivial() || h.rank() % 2 != 0) continue;
    bool pairs = true;
    for (size_t i = 0; i + 1 < h.rank(); i += 2)
      pairs = pairs && h.factors()[i] == h.factors()[i + 1];
    if (!pairs) continue;
    AlternatingPairing e = AlternatingPairing::standard(h);
    if (!is_nondegenerate(e)) continue;
    CocycleAlgebra alg = standard_cocycle(e);
    std::string hn = group_name(h);
    report.add("2-cocycle identity on H=" + hn, alg.check_cocycle_identity());
    report.add("associativity on H=" + hn, alg.check_associativity());
    report.add("center is 1-dimensional on H=" + hn, alg.center_dimension() == 1);
    bool comm_ok = true;
    for (size_t i = 0; i < h.rank() && comm_ok; ++i)
      for (size_t j = 0; j < h.rank(); ++j)
        if (alg.commutator(h.generator(i), h.generator(j)) != e.value_on_generators(i, j)) {
          comm_ok = false;
          break;
        }
    report.add("cocycle commutator recovers the pairing on H=" + hn, comm_ok);
  }
  return report;
}

SuiteReport verify_multiplicativity(i64 trials, std::uint64_t seed) {
  SuiteReport report{"multiplicativity", true, {}};
  std::mt19937_64 rng(seed);
  bool product_ok = true, dual_ok = true, power_ok = true;
  for (i64 t = 0; t < trials; ++t) {
    FiniteAbelianGroup g = random_group(256, rng);
    AlternatingPairing e1 = random_pairing(g, rng);
    AlternatingPairing e2 = random_pairing(g, rng);
    // e_{P1 P2} = e_{P1} e_{P2} and e_{P*} = e^{-1} at the pairing level
    AlternatingPairing prod = pairing_mul(e1, e2);
    for (size_t i = 0; i < g.rank() && product_ok; ++i)
      for (size_t j = 0; j < g.rank(); ++j)
        if (prod.value_on_generators(i, j) !=
            e1.value_on_generators(i, j) * e2.value_on_generators(i, j)) {
          product_ok = false;
          break;
        }
    dual_ok = dual_ok && pairing_mul(e1, pairing_power(e1, -1)).is_trivial();
    // e^d trivial on the non-degenerate quotient
    NondegenerateQuotient nq = nondegenerate_quotient(e1);
    Integer d = homogeneous_index(e1);
    power_ok = power_ok && pairing_power(nq.pairing, static_cast<i64>(d)).is_trivial();
  }
  report.add("pairing of a product is the product of pairings", product_ok);
  report.add("dual bundle pairing is the inverse", dual_ok);
  report.add("e^d trivial on the non-degenerate quotient", power_ok);
  return report;
}

SuiteReport verify_all(i64 max_k, int max_rank, int g, i64 n, std::uint64_t seed) {
  SuiteReport all{"all", true, {}};
  for (const SuiteReport& r :
       {verify_heisenberg(max_k), verify_orbits(max_rank), verify_brauer(g, n),
        verify_cocycle(16), verify_multiplicativity(50, seed)}) {
    for (const auto& c : r.checks) all.add(r.suite + ": " + c.name, c.pass, c.detail);
  }
  return all;
}

Json suite_report_to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
}

Json classify_pairing_command(const Json& pairing_json) {
  AlternatingPairing e = pairing_from_json(pairing_json);
  NormalForm nf = mumford_normal_form(e);
  Json out = normal_form_to_json(nf);
  out["index"] = static_cast<i64>(homogeneous_index(e));
  out["nondegenerate"] = nf.radical().is_trivial();
  if (!nf.round_trips()) fail(errc::internal_invariant, "normal form failed to round-trip");
  return out;
}

Json heisenberg_command(const Json& group_json) {
  FiniteAbelianGroup k = group_from_json(group_json);
  StandardRep rep(k);
  HeisenbergPairing hp = commutator_pairing(k);
  Json gens = Json::array();
  for (size_t i = 0; i < k.rank(); ++i) {
    ThetaElement t{RootOfUnity::one(rep.scalar_order()), k.generator(i), k.dual_zero()};
    gens.push_back(Json{{"element", theta_element_to_json(t)},
                        {"matrix", matrix_to_json(rep.matrix(t))}});
  }
  for (size_t j = 0; j < k.rank(); ++j) {
    ThetaElement t{RootOfUnity::one(rep.scalar_order()), k.zero(), k.dual_generator(j)};
    gens.push_back(Json{{"element", theta_element_to_json(t)},
                        {"matrix", matrix_to_json(rep.matrix(t))}});
  }
  return Json{{"k", group_to_json(k)},
              {"dimension", rep.dimension()},
              {"scalar_order", rep.scalar_order()},
              {"pairing", pairing_to_json(hp.pairing)},
              {"index", static_cast<i64>(homogeneous_index(hp.pairing))},
              {"irreducible", verify_irreducible(rep)},
              {"generators", gens}};
}

Json selfdual_orbits_command(int max_rank) {
  Json orbit_reports = Json::array();
  for (int r = 1; r <= max_rank; ++r) {
    OrbitReport rep = sp_orbits(r);
    Json orbits = Json::array();
    for (const auto& o : rep.orbits)
      orbits.push_back(Json{{"size", o.size}, {"kind", o.symmetric ? "symmetric" : "alternating"}});
    orbit_reports.push_back(Json{{"rank", r}, {"orbits", orbits}});
  }
  SelfDualThetaGroup d = build_block(BlockKind::dihedral);
  SelfDualThetaGroup q = build_block(BlockKind::quaternion);
  Json signs = Json::array();
  signs.push_back(Json{{"construction", "dihedral"}, {"rank", 1}, {"sign", d.sign}});
  signs.push_back(Json{{"construction", "quaternion"}, {"rank", 1}, {"sign", q.sign}});
  if (max_rank >= 2) {
    signs.push_back(
        Json{{"construction", "dihedral*dihedral"}, {"rank", 2}, {"sign", central_product(d, d).sign}});
    signs.push_back(
        Json{{"construction", "quaternion*dihedral"}, {"rank", 2}, {"sign", central_product(q, d).sign}});
    signs.push_back(
        Json{{"construction", "quaternion*quaternion"}, {"rank", 2}, {"sign", central_product(q, q).sign}});
  }
  return Json{{"orbit_reports", orbit_reports}, {"sign_reports", signs}};
}

Json brauer_command(const Json& model_json, const Json* cls) {
  AbelianVarietyModel model = model_from_json(model_json);
  BrauerGroupStructure br = brauer_group(model);
  Json phi_gens = Json::array();
  for (const auto& e : phi_image(model).generators) phi_gens.push_back(pairing_to_json(e));
  Json out{{"group", group_to_json(br.group)},
           {"order", static_cast<i64>(br.group.order())},
           {"phi_image_order", static_cast<i64>(br.phi_image_order)},
           {"phi_generators", phi_gens}};
  if (cls != nullptr) {
    AlternatingPairing rep = pairing_from_json(*cls);
    BrauerClass c{model, rep};
    ProjectivizationResult proj = is_projectivization(rep, model);
    Json cyclic = Json::array();
    for (const auto& [cn, cd] : cyclic_decomposition(c))
      cyclic.push_back(Json{{"n", cn}, {"d", cd}});
    Json cj{{"order", class_order(c)},
            {"cyclic_blocks", cyclic},
            {"is_projectivization", proj.projectivization}};
    if (proj.projectivization)
      cj["certificate"] = proj.certificate;
    else
      cj["separating"] = Json{{"functional", proj.separating_functional},
                              {"value", proj.separating_value}};
    out["class"] = cj;
  }
  return out;
}

Json verify_command(const std::string& suite, const VerifyOptions& options, bool& passed) {
  SuiteReport report;
  if (suite == "heisenberg")
    report = verify_heisenberg(options.max_k);
  else if (suite == "orbits")
    report = verify_orbits(options.max_rank);
  else if (suite == "brauer")
    report = verify_brauer(options.g, options.n);
  else if (suite == "cocycle")
    report = verify_cocycle(16);
  else if (suite == "multiplicativity")
    report = verify_multiplicativity(50, options.seed);
  else if (suite == "all")
    report = verify_all(options.max_k, options.max_rank, options.g, options.n, options.seed);
  else
    fail(errc::invalid_argument, "unknown suite '" + suite + "'");
  passed = report.pass;
  return suite_report_to_json(report);
}

} // namespace theta
