#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "theta/heisenberg.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

ThetaElement random_lift(const FiniteAbelianGroup& k, i64 scalar_order, std::mt19937_64& rng) {
  return ThetaElement{RootOfUnity(scalar_order, static_cast<i64>(rng() % scalar_order)),
                      k.element_at(rng() % k.order_ull()),
                      k.dual_element_at(rng() % k.order_ull())};
}

} // namespace

TEST_CASE("theta group law") {
  FiniteAbelianGroup k({2});
  ThetaElement id = theta_identity(k, 2);
  ThetaElement a{RootOfUnity::one(2), k.generator(0), k.dual_zero()};
  ThetaElement b{RootOfUnity::one(2), k.zero(), k.dual_generator(0)};
  CHECK(theta_equal(theta_mul(id, a), a));
  CHECK(theta_equal(theta_mul(a, id), a));

  // (t,x,chi)(t',x',chi') = (t t' chi'(x), ...): the scalar lands on the
  // product whose right factor carries the character
  ThetaElement ab = theta_mul(a, b);
  CHECK(ab.scalar == RootOfUnity(2, 1));
  CHECK(ab.x == k.generator(0));
  CHECK(ab.chi == k.dual_generator(0));
  ThetaElement ba = theta_mul(b, a);
  CHECK(ba.scalar.is_one());
  CHECK(ba.x == k.generator(0));
  CHECK(ba.chi == k.dual_generator(0));

  // inverses
  CHECK(theta_equal(theta_mul(a, theta_inv(a)), id));
  CHECK(theta_equal(theta_mul(b, theta_inv(b)), id));

  // associativity on 1000 random triples over K = (4,2)
  FiniteAbelianGroup k42({4, 2});
  std::mt19937_64 rng(71);
  for (int t = 0; t < 1000; ++t) {
    ThetaElement x = random_lift(k42, 4, rng);
    ThetaElement y = random_lift(k42, 4, rng);
    ThetaElement z = random_lift(k42, 4, rng);
    CHECK(theta_equal(theta_mul(theta_mul(x, y), z), theta_mul(x, theta_mul(y, z))));
  }

  FiniteAbelianGroup other({3});
  CHECK_THROWS_AS((void)theta_mul(a, theta_identity(other, 3)), Error);
}

TEST_CASE("commutator pairing") {
  FiniteAbelianGroup k({2});
  HeisenbergPairing hp = commutator_pairing(k);
  CHECK(hp.h.factors() == std::vector<i64>{2, 2});
  // mixed pair evaluates to -1
  GroupElement hx = hp.embed(k.generator(0), k.dual_zero());
  GroupElement hc = hp.embed(k.zero(), k.dual_generator(0));
  CHECK(hp.pairing.value(hx, hc) == RootOfUnity(2, 1));
  // alternating
  for (unsigned long long i = 0; i < 4; ++i)
    CHECK(hp.pairing.value(hp.h.element_at(i), hp.h.element_at(i)).is_one());
  CHECK(is_nondegenerate(hp.pairing));
  CHECK(homogeneous_index(hp.pairing) == Integer(k.order()));

  // K = (3): matches group-law commutators on all 81 pairs
  FiniteAbelianGroup k3({3});
  HeisenbergPairing hp3 = commutator_pairing(k3);
  for (unsigned long long i = 0; i < 9; ++i)
    for (unsigned long long j = 0; j < 9; ++j) {
      auto [x1, c1] = hp3.split(hp3.h.element_at(i));
      auto [x2, c2] = hp3.split(hp3.h.element_at(j));
      ThetaElement t1{RootOfUnity::one(3), x1, c1}, t2{RootOfUnity::one(3), x2, c2};
      CHECK(theta_commutator(t1, t2) ==
            hp3.pairing.value(hp3.h.element_at(i), hp3.h.element_at(j)));
    }
}

TEST_CASE("standard representation") {
  for (const auto& k : abelian_groups_up_to(8)) {
    StandardRep rep(k);
    CHECK(rep.dimension() == k.order_ull());
  }

  FiniteAbelianGroup k({2});
  StandardRep rep(k);
  CycloMatrix swap = rep.matrix(k.generator(0), k.dual_zero());
  CHECK(swap.at(0, 0).is_zero());
  CHECK(swap.at(0, 1) == Cyclotomic::one(2));
  CHECK(swap.at(1, 0) == Cyclotomic::one(2));
  CycloMatrix diag = rep.matrix(k.zero(), k.dual_generator(0));
  CHECK(diag.at(0, 0) == Cyclotomic::one(2));
  CHECK(diag.at(1, 1) == Cyclotomic::from_rational(2, Rational(-1)));
  CHECK(diag.at(0, 1).is_zero());

  // homomorphism property, exhaustive over all mu_2 x K x X(K) lifts
  std::vector<ThetaElement> lifts;
  for (i64 s = 0; s < 2; ++s)
    for (unsigned long long xi = 0; xi < 2; ++xi)
      for (unsigned long long ci = 0; ci < 2; ++ci)
        lifts.push_back(
            ThetaElement{RootOfUnity(2, s), k.element_at(xi), k.dual_element_at(ci)});
  CHECK(lifts.size() == 8);
  for (const auto& a : lifts)
    for (const auto& b : lifts)
      CHECK(rep.matrix(a) * rep.matrix(b) == rep.matrix(theta_mul(a, b)));
}

TEST_CASE("irreducibility") {
  CHECK(verify_irreducible(StandardRep(FiniteAbelianGroup({2}))));
  CHECK(verify_irreducible(StandardRep(FiniteAbelianGroup({3}))));
  CHECK(verify_irreducible(StandardRep(FiniteAbelianGroup({2, 2}))));

  // a direct sum of two copies is not irreducible
  FiniteAbelianGroup k({2});
  StandardRep rep(k);
  std::vector<CycloMatrix> doubled;
  for (unsigned long long xi = 0; xi < 2; ++xi)
    for (unsigned long long ci = 0; ci < 2; ++ci) {
      CycloMatrix m = rep.matrix(k.element_at(xi), k.dual_element_at(ci));
      CycloMatrix big(4, 4, m.order());
      for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) big.set(2 * b + i, 2 * b + j, m.at(i, j));
      doubled.push_back(big);
    }
  CHECK_FALSE(verify_irreducible(doubled, 4));
}

TEST_CASE("u_h basis") {
  FiniteAbelianGroup k({2});
  UhBasis uh = uh_basis(k);
  CHECK(uh.u[0] == CycloMatrix::identity(2, 2));

  GroupElement h10 = uh.hdata.embed(k.generator(0), k.dual_zero());
  GroupElement h01 = uh.hdata.embed(k.zero(), k.dual_generator(0));
  GroupElement h11 = uh.hdata.embed(k.generator(0), k.dual_generator(0));
  CHECK(uh.at(h10) * uh.at(h01) ==
        uh.at(h11).scaled(Cyclotomic::from_rational(2, Rational(-1))));

  // K = (2,2): |H| = 16 matrices span the 16-dimensional matrix space
  UhBasis uh22 = uh_basis(FiniteAbelianGroup({2, 2}));
  CHECK(uh22.u.size() == 16);
  CHECK(family_rank(uh22.u) == 16);

  // structure constants u_h u_h' = chi'(x) u_{h+h'} for K = (4,2) spot checks
  FiniteAbelianGroup k42({4, 2});
  UhBasis uh42 = uh_basis(k42);
  std::mt19937_64 rng(73);
  for (int t = 0; t < 60; ++t) {
    unsigned long long i = rng() % uh42.hdata.h.order_ull();
    unsigned long long j = rng() % uh42.hdata.h.order_ull();
    GroupElement hi = uh42.hdata.h.element_at(i), hj = uh42.hdata.h.element_at(j);
    auto [x1, c1] = uh42.hdata.split(hi);
    auto [x2, c2] = uh42.hdata.split(hj);
    CHECK(uh42.u[i] * uh42.u[j] ==
          uh42.at(hi + hj).scaled(
              Cyclotomic::from_root(c2.eval(x1), uh42.rep.scalar_order())));
  }
}

TEST_CASE("full heisenberg verification suite up to |K| = 6") {
  SuiteReport report = verify_heisenberg(6);
  for (const auto& c : report.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  CHECK(report.pass);
}

TEST_CASE("weight-1 decomposition") {
  FiniteAbelianGroup k({2});
  StandardRep rep(k);
  CycloMatrix a = rep.matrix(k.generator(0), k.dual_zero());
  CycloMatrix b = rep.matrix(k.zero(), k.dual_generator(0));

  CHECK(decompose_weight1(Weight1Rep(k, 2, {a}, {b})).multiplicity == 1);

  // conjugated double copy has multiplicity 2
  std::mt19937_64 rng(79);
  auto blockdiag = [&](const CycloMatrix& m, size_t copies) {
    size_t n = m.rows();
    CycloMatrix big(n * copies, n * copies, m.order());
    for (size_t c = 0; c < copies; ++c)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) big.set(c * n + i, c * n + j, m.at(i, j));
    return big;
  };
  auto random_invertible = [&](size_t n, i64 order) {
    for (;;) {
      CycloMatrix p(n, n, order);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          p.set(i, j, Rational(static_cast<long long>(rng() % 7) - 3));
      if (p.rank() == n) return p;
    }
  };
  CycloMatrix p = random_invertible(4, 2);
  CycloMatrix pinv = p.inverse();
  Weight1Rep doubled(k, 2, {p * blockdiag(a, 2) * pinv}, {p * blockdiag(b, 2) * pinv});
  auto dec = decompose_weight1(doubled);
  CHECK(dec.multiplicity == 2);

  // broken relations are rejected
  CycloMatrix id3 = CycloMatrix::identity(3, 2);
  CHECK_THROWS_AS((void)decompose_weight1(Weight1Rep(k, 2, {id3}, {id3})), Error);
  try {
    (void)decompose_weight1(Weight1Rep(k, 2, {id3}, {id3}));
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_representation);
  }

  // a central extra assignment with the wrong scalar action
  ThetaElement central{RootOfUnity(4, 1), k.zero(), k.dual_zero()};
  Weight1Rep bad(k, 4, {a.lifted(4)}, {b.lifted(4)},
                 {{central, CycloMatrix::identity(2, 4)}});
  CHECK_THROWS_AS((void)decompose_weight1(bad), Error);
  try {
    (void)decompose_weight1(bad);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_weight_one);
  }
  // and with the right action it passes
  ThetaElement central_ok{RootOfUnity(4, 1), k.zero(), k.dual_zero()};
  CycloMatrix scalar_i =
      CycloMatrix::identity(2, 4).scaled(Cyclotomic::from_root(RootOfUnity(4, 1), 4));
  Weight1Rep good(k, 4, {a.lifted(4)}, {b.lifted(4)}, {{central_ok, scalar_i}});
  CHECK(decompose_weight1(good).multiplicity == 1);
}

TEST_CASE("weight-1 multiplicity counts the K-fixed space") {
  std::mt19937_64 rng(83);
  for (const auto& k : abelian_groups_up_to(4)) {
    if (k.is_trivial()) continue;
    StandardRep rep(k);
    size_t n = rep.dimension();
    std::vector<CycloMatrix> agens, bgens;
    for (size_t i = 0; i < k.rank(); ++i) {
      agens.push_back(rep.matrix(k.generator(i), k.dual_zero()));
      bgens.push_back(rep.matrix(k.zero(), k.dual_generator(i)));
    }
    for (size_t m = 1; m <= 3; ++m) {
      auto blockdiag = [&](const CycloMatrix& mat) {
        CycloMatrix big(n * m, n * m, mat.order());
        for (size_t c = 0; c < m; ++c)
          for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) big.set(c * n + i, c * n + j, mat.at(i, j));
        return big;
      };
      CycloMatrix p(n * m, n * m, rep.scalar_order());
      do {
        for (size_t i = 0; i < n * m; ++i)
          for (size_t j = 0; j < n * m; ++j)
            p.set(i, j, Rational(static_cast<long long>(rng() % 5) - 2));
      } while (p.rank() != n * m);
      CycloMatrix pinv = p.inverse();
      std::vector<CycloMatrix> ac, bc;
      for (const auto& g : agens) ac.push_back(p * blockdiag(g) * pinv);
      for (const auto& g : bgens) bc.push_back(p * blockdiag(g) * pinv);
      CHECK(decompose_weight1(Weight1Rep(k, 0, ac, bc)).multiplicity == m);
    }
  }
}

TEST_CASE("splitting for trivial pairings, refusal otherwise") {
  // Heisenberg standard rep refuses with a witness pair
  FiniteAbelianGroup k({2});
  StandardRep rep(k);
  HeisenbergPairing hp = commutator_pairing(k);
  std::vector<CycloMatrix> gens{rep.matrix(k.generator(0), k.dual_zero()),
                                rep.matrix(k.zero(), k.dual_generator(0))};
  SplitResult res = split_if_trivial_pairing(hp.h, hp.pairing, gens);
  REQUIRE(std::holds_alternative<SplitRefusal>(res));
  const auto& refusal = std::get<SplitRefusal>(res);
  CHECK(refusal.value == RootOfUnity(2, 1));
  CHECK_FALSE(hp.pairing.value(refusal.x, refusal.y).is_one());

  // commuting diagonal matrices split with a common eigenbasis
  FiniteAbelianGroup h({2, 2});
  CycloMatrix d1(2, 2, 4), d2(2, 2, 4);
  d1.set(0, 0, Rational(1));
  d1.set(1, 1, Rational(-1));
  d2.set(0, 0, Rational(-1));
  d2.set(1, 1, Rational(-1));
  SplitResult res2 =
      split_if_trivial_pairing(h, AlternatingPairing::trivial(h), {d1, d2});
  REQUIRE(std::holds_alternative<LinearLift>(res2));
  const auto& lift = std::get<LinearLift>(res2);
  CHECK(lift.basis.rank() == 2);
  // the corrected generators act diagonally on the basis with the stated characters
  for (size_t i = 0; i < 2; ++i) {
    CycloMatrix g = (i == 0 ? d1 : d2).lifted(lift.basis.order())
                        .scaled(Cyclotomic::from_root(lift.scalar_twists[i],
                                                      lift.basis.order()));
    for (size_t col = 0; col < 2; ++col) {
      CycloMatrix v(2, 1, lift.basis.order());
      v.set(0, 0, lift.basis.at(0, col));
      v.set(1, 0, lift.basis.at(1, col));
      CHECK(g * v == v.scaled(Cyclotomic::from_root(lift.characters[col][i],
                                                    lift.basis.order())));
    }
  }

  // one-dimensional representations always split
  FiniteAbelianGroup h2({2});
  CycloMatrix one_dim(1, 1, 4);
  one_dim.set(0, 0, Cyclotomic::from_root(RootOfUnity(4, 1), 4));
  SplitResult res3 =
      split_if_trivial_pairing(h2, AlternatingPairing::trivial(h2), {one_dim});
  CHECK(std::holds_alternative<LinearLift>(res3));
}
