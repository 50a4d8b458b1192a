#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "theta/pairing.hpp"

using namespace theta;

namespace {

// brute-force radical by scanning every element
std::set<std::vector<i64>> radical_scan(const AlternatingPairing& e) {
  const FiniteAbelianGroup& h = e.group();
  std::set<std::vector<i64>> rad;
  for (unsigned long long i = 0; i < h.order_ull(); ++i) {
    GroupElement x = h.element_at(i);
    bool in_radical = true;
    for (size_t j = 0; j < h.rank() && in_radical; ++j)
      in_radical = e.value(x, h.generator(j)).is_one();
    if (in_radical) rad.insert(x.coords());
  }
  return rad;
}

std::set<std::vector<i64>> subgroup_elements(const Subgroup& s) {
  std::set<std::vector<i64>> elems;
  elems.insert(s.ambient.zero().coords());
  for (size_t t = 0; t < s.generators.size(); ++t) {
    std::set<std::vector<i64>> next;
    for (const auto& c : elems) {
      GroupElement cur = s.ambient.element(c);
      for (i64 j = 0; j < s.group.factors()[t]; ++j) {
        next.insert(cur.coords());
        cur = cur + s.generators[t];
      }
    }
    elems = std::move(next);
  }
  return elems;
}

} // namespace

TEST_CASE("pairing construction validates") {
  FiniteAbelianGroup h({4, 2});
  // order of e(g1,g2) must divide gcd(4,2) = 2
  CHECK_THROWS_AS(AlternatingPairing(h, {{0, 1}, {-1, 0}}), Error);
  CHECK_NOTHROW(AlternatingPairing(h, {{0, 2}, {-2, 0}}));
  // diagonal must vanish, matrix must be antisymmetric
  FiniteAbelianGroup g22({2, 2});
  CHECK_THROWS_AS(AlternatingPairing(g22, {{1, 0}, {0, 0}}), Error);
  FiniteAbelianGroup g44({4, 4});
  CHECK_THROWS_AS(AlternatingPairing(g44, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("radical") {
  // trivial pairing: radical is everything
  FiniteAbelianGroup h1({6, 2});
  Subgroup r1 = radical(AlternatingPairing::trivial(h1));
  CHECK(r1.group == h1);

  // standard symplectic plane over F_2
  Subgroup r2 = radical(AlternatingPairing::standard(FiniteAbelianGroup({2, 2})));
  CHECK(r2.is_trivial());

  // random pairings on (4,4,2,2): exact radical equals the exhaustive scan
  std::mt19937_64 rng(2024);
  FiniteAbelianGroup h({4, 4, 2, 2});
  for (int t = 0; t < 25; ++t) {
    AlternatingPairing e = random_pairing(h, rng);
    Subgroup rad = radical(e);
    CHECK(subgroup_elements(rad) == radical_scan(e));
    CHECK(Integer(radical_scan(e).size()) == rad.order());
  }
}

TEST_CASE("non-degeneracy") {
  CHECK_FALSE(is_nondegenerate(AlternatingPairing::trivial(FiniteAbelianGroup({2}))));
  CHECK(is_nondegenerate(AlternatingPairing::trivial(FiniteAbelianGroup())));
  for (i64 n = 2; n <= 6; ++n)
    CHECK(is_nondegenerate(AlternatingPairing::standard(FiniteAbelianGroup({n, n}))));

  // no pairing on a group of non-square order is non-degenerate
  std::mt19937_64 rng(31);
  for (const auto& g : abelian_groups_up_to(100)) {
    if (g.is_trivial()) continue;
    Integer o = g.order();
    if (exact_sqrt(o)) continue;
    for (int t = 0; t < 5; ++t) CHECK_FALSE(is_nondegenerate(random_pairing(g, rng)));
  }
}

TEST_CASE("homogeneous index") {
  for (i64 n = 2; n <= 6; ++n)
    CHECK(homogeneous_index(AlternatingPairing::standard(FiniteAbelianGroup({n, n}))) == n);
  CHECK(homogeneous_index(AlternatingPairing::trivial(FiniteAbelianGroup({8, 2}))) == 1);

  // rank-deficient pairing on (4,4,2,2): index equals the product of the
  // block orders of the non-degenerate quotient
  FiniteAbelianGroup h({4, 4, 2, 2});
  AlternatingPairing e(h, {{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
  NondegenerateQuotient nq = nondegenerate_quotient(e);
  NormalForm qnf = mumford_normal_form(nq.pairing);
  Integer prod = 1;
  for (i64 n : qnf.block_orders()) prod *= n;
  CHECK(homogeneous_index(e) == prod);
}

TEST_CASE("mumford normal form on the spec examples") {
  NormalForm nf22 = mumford_normal_form(AlternatingPairing::standard(FiniteAbelianGroup({2, 2})));
  CHECK(nf22.block_orders() == std::vector<i64>{2});
  CHECK(nf22.twists() == std::vector<i64>{1});
  CHECK(nf22.round_trips());

  FiniteAbelianGroup h33({3, 3});
  NormalForm nf33 = mumford_normal_form(AlternatingPairing(h33, {{0, 2}, {1, 0}}));
  CHECK(nf33.block_orders() == std::vector<i64>{3});
  CHECK(nf33.twists() == std::vector<i64>{2});
  CHECK(nf33.round_trips());

  FiniteAbelianGroup h4422({4, 4, 2, 2});
  AlternatingPairing e(h4422, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
  NormalForm nf = mumford_normal_form(e);
  CHECK(nf.block_orders() == std::vector<i64>{4, 2});
  CHECK(nf.twists() == std::vector<i64>{1, 1});
  CHECK(nf.round_trips());

  CHECK_THROWS_AS((void)mumford_normal_form(
                      AlternatingPairing::trivial(FiniteAbelianGroup({2})), false),
                  Error);
}

TEST_CASE("pairing powers and products") {
  std::mt19937_64 rng(47);
  for (i64 n = 2; n <= 6; ++n) {
    AlternatingPairing e = AlternatingPairing::standard(FiniteAbelianGroup({n, n}));
    Integer d = homogeneous_index(e);
    CHECK(pairing_power(e, static_cast<i64>(d)).is_trivial());
    CHECK(pairing_power(e, 1) == e);
  }
  for (int t = 0; t < 30; ++t) {
    FiniteAbelianGroup g = random_group(200, rng);
    AlternatingPairing e = random_pairing(g, rng);
    CHECK(pairing_mul(e, pairing_power(e, -1)).is_trivial());
  }
}

TEST_CASE("index squared times radical order is the group order") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    FiniteAbelianGroup g = random_group(512, rng);
    AlternatingPairing e = random_pairing(g, rng);
    Integer d = homogeneous_index(e);
    CHECK(d * d * radical(e).order() == g.order());
  }
}

TEST_CASE("normal form round-trips on random pairings") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 100; ++t) {
    FiniteAbelianGroup g = random_group(512, rng);
    AlternatingPairing e = random_pairing(g, rng);
    NormalForm nf = mumford_normal_form(e);
    CHECK(nf.round_trips());
    auto orders = nf.block_orders();
    for (size_t i = 0; i + 1 < orders.size(); ++i) CHECK(orders[i] % orders[i + 1] == 0);
    for (const auto& b : nf.blocks()) {
      CHECK(gcd_ll(b.d, b.n) == 1);
      CHECK(b.d >= 1);
      CHECK(b.d < b.n);
    }
    // coordinates round-trip on a few elements
    for (int s = 0; s < 5; ++s) {
      GroupElement x = g.element_at(rng() % g.order_ull());
      CHECK(nf.from_coordinates(nf.coordinates(x)) == x);
    }
  }
}

TEST_CASE("block orders are basis independent") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    i64 n = 2 + static_cast<i64>(rng() % 5);
    FiniteAbelianGroup h({n, n, n, n});
    AlternatingPairing e = random_pairing(h, rng);
    // pull back through a random invertible change of generators
    auto random_gl = [&]() {
      std::vector<std::vector<i64>> p(4, std::vector<i64>(4, 0));
      for (int i = 0; i < 4; ++i) p[i][i] = 1;
      for (int ops = 0; ops < 12; ++ops) {
        size_t i = rng() % 4, j = rng() % 4;
        if (i == j) continue;
        i64 c = 1 + static_cast<i64>(rng() % (n - 1));
        for (int k = 0; k < 4; ++k) p[i][k] = mod_ll(p[i][k] + c * p[j][k], n);
      }
      return p;
    };
    auto pullback = [&](const std::vector<std::vector<i64>>& p) {
      std::vector<std::vector<i64>> m(4, std::vector<i64>(4, 0));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          i64 acc = 0;
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l)
              acc = mod_ll(acc + p[i][k] * e.matrix()[k][l] % n * p[j][l], n);
          m[i][j] = acc;
        }
      return AlternatingPairing(h, m);
    };
    auto o0 = mumford_normal_form(e).block_orders();
    CHECK(mumford_normal_form(pullback(random_gl())).block_orders() == o0);
    CHECK(mumford_normal_form(pullback(random_gl())).block_orders() == o0);
  }
}

TEST_CASE("exactly one symplectic form on the F_2 plane") {
  FiniteAbelianGroup h({2, 2});
  int nondeg = 0;
  for (i64 v = 0; v < 2; ++v) {
    AlternatingPairing e(h, {{0, v}, {-v, 0}});
    if (is_nondegenerate(e)) ++nondeg;
  }
  CHECK(nondeg == 1);
}

TEST_CASE("nondegenerate quotient carries the induced pairing") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 30; ++t) {
    FiniteAbelianGroup g = random_group(256, rng);
    AlternatingPairing e = random_pairing(g, rng);
    NondegenerateQuotient nq = nondegenerate_quotient(e);
    CHECK(is_nondegenerate(nq.pairing));
    // projection respects the pairing through the section
    for (size_t i = 0; i < nq.quotient.rank(); ++i)
      for (size_t j = 0; j < nq.quotient.rank(); ++j)
        CHECK(nq.pairing.value_on_generators(i, j) == e.value(nq.section[i], nq.section[j]));
    for (size_t i = 0; i < nq.quotient.rank(); ++i)
      CHECK(nq.projection.apply(nq.section[i]) == nq.quotient.generator(i));
  }
}
