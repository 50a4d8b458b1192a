#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "theta/cyclotomic.hpp"

using namespace theta;

namespace {

// Test-only oracle: arithmetic in the redundant representation
// Q[x]/(x^N - 1), reduced into Q(zeta_N) only at the very end.
struct ModXN {
  i64 n;
  std::vector<Rational> c; // length n

  static ModXN from_exponent(i64 n, i64 e) {
    ModXN p{n, std::vector<Rational>(n, Rational(0))};
    p.c[mod_ll(e, n)] = 1;
    return p;
  }
  ModXN add(const ModXN& o) const {
    ModXN r = *this;
    for (i64 i = 0; i < n; ++i) r.c[i] += o.c[i];
    return r;
  }
  ModXN mul(const ModXN& o) const {
    ModXN r{n, std::vector<Rational>(n, Rational(0))};
    for (i64 i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      for (i64 j = 0; j < n; ++j) r.c[(i + j) % n] += c[i] * o.c[j];
    }
    return r;
  }
  Cyclotomic reduced() const { return Cyclotomic::from_polynomial(n, c); }
};

Cyclotomic random_cyclo(i64 order, std::mt19937_64& rng, int spread = 4) {
  std::vector<Rational> c(euler_phi(order));
  for (auto& x : c) {
    long long num = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
    long long den = 1 + static_cast<long long>(rng() % 3);
    x = Rational(num, den);
  }
  return Cyclotomic(order, std::move(c));
}

} // namespace

TEST_CASE("cyclo_mul basics") {
  Cyclotomic i = Cyclotomic::from_root(RootOfUnity(4, 1), 4);
  CHECK(i * i == Cyclotomic::from_rational(4, Rational(-1)));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Cyclotomic x = random_cyclo(12, rng);
    CHECK(x * Cyclotomic::one(12) == x);
  }
}

TEST_CASE("cyclo_mul against the x^N - 1 oracle") {
  // (1 + zeta_5)(1 + zeta_5^{-1})
  ModXN lhs = ModXN::from_exponent(5, 0).add(ModXN::from_exponent(5, 1));
  ModXN rhs = ModXN::from_exponent(5, 0).add(ModXN::from_exponent(5, 4));
  Cyclotomic expected = lhs.mul(rhs).reduced();

  Cyclotomic a = Cyclotomic::one(5) + Cyclotomic::from_root(RootOfUnity(5, 1), 5);
  Cyclotomic b = Cyclotomic::one(5) + Cyclotomic::from_root(RootOfUnity(5, 4), 5);
  CHECK(a * b == expected);

  // randomized cross-check over zeta_12
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    ModXN p{12, std::vector<Rational>(12, Rational(0))};
    ModXN q{12, std::vector<Rational>(12, Rational(0))};
    for (i64 i = 0; i < 12; ++i) {
      p.c[i] = Rational(static_cast<long long>(rng() % 7) - 3);
      q.c[i] = Rational(static_cast<long long>(rng() % 7) - 3);
    }
    CHECK(p.reduced() * q.reduced() == p.mul(q).reduced());
  }
}

TEST_CASE("cyclo_inv") {
  CHECK(Cyclotomic::from_rational(1, Rational(2)).inverse() ==
        Cyclotomic::from_rational(1, Rational(1, 2)));
  for (i64 n : {3, 4, 5, 8, 12}) {
    Cyclotomic z = Cyclotomic::from_root(RootOfUnity(n, 1), n);
    CHECK(z.inverse() == Cyclotomic::from_root(RootOfUnity(n, n - 1), n));
  }
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 20) {
    Cyclotomic a = random_cyclo(12, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == Cyclotomic::one(12));
    ++tested;
  }
  CHECK_THROWS_AS((void)Cyclotomic::zero(6).inverse(), Error);
  try {
    (void)Cyclotomic::zero(6).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_inversion);
  }
}

TEST_CASE("lift_order") {
  RootOfUnity minus_one(2, 1);
  RootOfUnity lifted = lift_order(minus_one, 4);
  CHECK(lifted.order() == 4);
  CHECK(lifted.exponent() == 2);
  CHECK(lifted == minus_one);

  RootOfUnity x(6, 5);
  CHECK(lift_order(x, 6) == x);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    i64 n = 2 + static_cast<i64>(rng() % 14);
    RootOfUnity y(n, static_cast<i64>(rng() % n));
    CHECK(lift_order(y, 3 * n) == y);
  }
  CHECK_THROWS_AS((void)lift_order(RootOfUnity(4, 1), 6), Error);
  try {
    (void)lift_order(RootOfUnity(4, 1), 6);
  } catch (const Error& e) {
    CHECK(e.code() == errc::incompatible_order);
  }
}

TEST_CASE("field axioms on Q(zeta_N) for N <= 24") {
  std::mt19937_64 rng(23);
  for (i64 n = 1; n <= 24; ++n) {
    for (int t = 0; t < 3; ++t) {
      Cyclotomic a = random_cyclo(n, rng), b = random_cyclo(n, rng), c = random_cyclo(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::one(n));
      CHECK(a + (-a) == Cyclotomic::zero(n));
    }
  }
}

TEST_CASE("roots of unity form Z/N under multiplication, N <= 16") {
  for (i64 n = 1; n <= 16; ++n) {
    for (i64 a = 0; a < n; ++a)
      for (i64 b = 0; b < n; ++b) {
        RootOfUnity prod = RootOfUnity(n, a) * RootOfUnity(n, b);
        CHECK(prod == RootOfUnity(n, (a + b) % n));
      }
    for (i64 a = 0; a < n; ++a)
      CHECK((RootOfUnity(n, a) * RootOfUnity(n, a).inverse()).is_one());
  }
  // cross-order equality
  CHECK(RootOfUnity(2, 1) == RootOfUnity(4, 2));
  CHECK(RootOfUnity(3, 1) != RootOfUnity(4, 1));
  CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));
}

TEST_CASE("embedding is a homomorphism for orders <= 12") {
  for (i64 n1 = 1; n1 <= 12; ++n1)
    for (i64 n2 = 1; n2 <= 12; ++n2) {
      i64 m = lcm_ll(n1, n2);
      for (i64 a = 0; a < n1; ++a)
        for (i64 b = 0; b < n2; ++b) {
          RootOfUnity x(n1, a), y(n2, b);
          CHECK(Cyclotomic::from_root(x * y, m) ==
                Cyclotomic::from_root(x, m) * Cyclotomic::from_root(y, m));
        }
    }
}

TEST_CASE("nth_root round-trips") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    i64 n = 1 + static_cast<i64>(rng() % 12);
    i64 m = 1 + static_cast<i64>(rng() % 6);
    RootOfUnity x(n, static_cast<i64>(rng() % n));
    CHECK(x.nth_root(m).pow(m) == x);
  }
}
