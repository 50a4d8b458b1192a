#pragma once

#include <vector>

#include "theta/rational.hpp"

namespace theta {

i64 euler_phi(i64 n);
i64 gcd_ll(i64 a, i64 b);
i64 lcm_ll(i64 a, i64 b);
i64 mod_ll(i64 a, i64 m); // least nonnegative residue
i64 mod_inverse(i64 a, i64 m);

// The abstract root of unity zeta_N^a. Equality is order-independent:
// values agree after lifting both to the lcm of the orders.
class RootOfUnity {
public:
  RootOfUnity() : order_(1), exp_(0) {}
  RootOfUnity(i64 order, i64 exponent);

  static RootOfUnity one(i64 order = 1) { return RootOfUnity(order, 0); }

  i64 order() const { return order_; }
  i64 exponent() const { return exp_; }
  // Multiplicative order of the value itself: N / gcd(N, a).
  i64 value_order() const;
  bool is_one() const { return exp_ == 0; }

  RootOfUnity lifted(i64 new_order) const; // errc::incompatible_order unless order | new_order
  RootOfUnity inverse() const { return RootOfUnity(order_, -exp_); }
  RootOfUnity pow(i64 m) const;
  // Canonical m-th root: zeta_{mN}^a. Satisfies root.pow(m) == *this.
  RootOfUnity nth_root(i64 m) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }

private:
  i64 order_;
  i64 exp_;
};

RootOfUnity lift_order(const RootOfUnity& x, i64 new_order);

// Monic minimal polynomial of a primitive n-th root of unity, as integer
// coefficients c[0..phi(n)] in increasing degree. Results are cached.
const std::vector<Integer>& cyclotomic_polynomial(i64 n);

// Element of Q(zeta_N), stored as the residue of a polynomial in zeta_N
// modulo the N-th cyclotomic polynomial: phi(N) rational coefficients.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

  static Cyclotomic zero(i64 order);
  static Cyclotomic one(i64 order);
  static Cyclotomic from_rational(i64 order, const Rational& r);
  // Embed zeta_M^a into Q(zeta_order); requires M | order.
  static Cyclotomic from_root(const RootOfUnity& z, i64 order);
  // Reduce an arbitrary-degree polynomial in zeta_order.
  static Cyclotomic from_polynomial(i64 order, std::vector<Rational> poly);
  // Coefficients must already have length phi(order).
  Cyclotomic(i64 order, std::vector<Rational> coeffs);

  i64 order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const; // errc::internal_invariant if not rational

  Cyclotomic lifted(i64 new_order) const;
  Cyclotomic inverse() const; // errc::zero_inversion on 0

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
  i64 order_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyclo_inv(const Cyclotomic& a) { return a.inverse(); }

} // namespace theta
