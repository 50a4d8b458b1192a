#include "theta/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace theta {

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad rational literal '" + s + "'");
  }
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Integer falling_factorial(const Integer& n, i64 k) {
  Integer acc = 1;
  for (i64 i = 0; i < k; ++i) acc *= (n - i);
  return acc;
}

Integer integer_pow(const Integer& base, i64 e) {
  Integer acc = 1;
  for (i64 i = 0; i < e; ++i) acc *= base;
  return acc;
}

i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }
i64 lcm_ll(i64 a, i64 b) { return std::lcm(a, b); }

i64 mod_ll(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mod_inverse(i64 a, i64 m) {
  a = mod_ll(a, m);
  i64 t = 0, newt = 1, r = m, newr = a;
  while (newr != 0) {
    i64 q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) fail(errc::invalid_argument, "element not invertible mod m");
  return mod_ll(t, m);
}

i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

RootOfUnity::RootOfUnity(i64 order, i64 exponent) : order_(order) {
  if (order < 1) fail(errc::invalid_argument, "root-of-unity order must be positive");
  exp_ = mod_ll(exponent, order);
}

i64 RootOfUnity::value_order() const { return order_ / gcd_ll(order_, exp_); }

RootOfUnity RootOfUnity::lifted(i64 new_order) const {
  if (new_order % order_ != 0)
    fail(errc::incompatible_order, "cannot lift root of order " + std::to_string(order_) +
                                       " to order " + std::to_string(new_order));
  return RootOfUnity(new_order, exp_ * (new_order / order_));
}

RootOfUnity RootOfUnity::pow(i64 m) const {
  i64 e = mod_ll(m, order_);
  return RootOfUnity(order_, exp_ * e);
}

RootOfUnity RootOfUnity::nth_root(i64 m) const {
  if (m < 1) fail(errc::invalid_argument, "nth_root needs positive n");
  return RootOfUnity(order_ * m, exp_);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  i64 m = lcm_ll(a.order_, b.order_);
  return RootOfUnity(m, a.exp_ * (m / a.order_) + b.exp_ * (m / b.order_));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  i64 m = lcm_ll(a.order_, b.order_);
  return a.exp_ * (m / a.order_) == b.exp_ * (m / b.order_);
}

RootOfUnity lift_order(const RootOfUnity& x, i64 new_order) { return x.lifted(new_order); }

namespace {

using ZPoly = std::vector<Integer>; // coefficients, increasing degree

// Exact division of integer polynomials, quotient assumed integral.
ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() - den.size() + 1, Integer(0));
  for (i64 i = static_cast<i64>(q.size()) - 1; i >= 0; --i) {
    Integer c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) fail(errc::internal_invariant, "inexact polynomial division");
  return q;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(i64 n) {
  static std::map<i64, ZPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::function<const ZPoly&(i64)> get = [&](i64 m) -> const ZPoly& {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    ZPoly p(m + 1, Integer(0));
    p[0] = -1;
    p[m] = 1;
    for (i64 d = 1; d < m; ++d)
      if (m % d == 0) p = zpoly_div_exact(std::move(p), get(d));
    return cache.emplace(m, std::move(p)).first->second;
  };
  return get(n);
}

Cyclotomic Cyclotomic::zero(i64 order) {
  return Cyclotomic(order, std::vector<Rational>(euler_phi(order), Rational(0)));
}

Cyclotomic Cyclotomic::one(i64 order) { return from_rational(order, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(i64 order, const Rational& r) {
  std::vector<Rational> c(euler_phi(order), Rational(0));
  c[0] = r;
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_root(const RootOfUnity& z, i64 order) {
  RootOfUnity lifted = z.lifted(order);
  std::vector<Rational> poly(static_cast<size_t>(lifted.exponent()) + 1, Rational(0));
  poly.back() = Rational(1);
  return from_polynomial(order, std::move(poly));
}

Cyclotomic Cyclotomic::from_polynomial(i64 order, std::vector<Rational> poly) {
  const auto& phi_poly = cyclotomic_polynomial(order);
  size_t deg = phi_poly.size() - 1; // = euler_phi(order)
  // Remainder modulo the monic Phi_N.
  while (poly.size() > deg) {
    Rational c = poly.back();
    size_t top = poly.size() - 1;
    poly.pop_back();
    if (c != 0)
      for (size_t j = 0; j < deg; ++j) poly[top - deg + j] -= c * Rational(phi_poly[j]);
  }
  poly.resize(deg, Rational(0));
  return Cyclotomic(order, std::move(poly));
}

Cyclotomic::Cyclotomic(i64 order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) fail(errc::invalid_argument, "cyclotomic order must be positive");
  if (static_cast<i64>(coeffs_.size()) != euler_phi(order))
    fail(errc::invalid_argument, "cyclotomic coefficient count must equal phi(order)");
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(errc::internal_invariant, "cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(i64 new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    fail(errc::incompatible_order, "cannot lift cyclotomic order " + std::to_string(order_) +
                                       " to " + std::to_string(new_order));
  i64 scale = new_order / order_;
  std::vector<Rational> poly(static_cast<size_t>((coeffs_.size() - 1) * scale) + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * scale] = coeffs_[i];
  return from_polynomial(new_order, std::move(poly));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    i64 m = lcm_ll(a.order_, b.order_);
    return a.lifted(m) + b.lifted(m);
  }
  std::vector<Rational> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    i64 m = lcm_ll(a.order_, b.order_);
    return a.lifted(m) * b.lifted(m);
  }
  if (a.is_zero() || b.is_zero()) return Cyclotomic::zero(a.order_);
  std::vector<Rational> conv(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic::from_polynomial(a.order_, std::move(conv));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    i64 m = lcm_ll(a.order_, b.order_);
    return a.lifted(m) == b.lifted(m);
  }
  return a.coeffs_ == b.coeffs_;
}

namespace {

using QPoly = std::vector<Rational>;

size_t qpoly_degree(const QPoly& p) {
  size_t d = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) d = i;
  return d;
}

bool qpoly_is_zero(const QPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

// division with remainder: num = q * den + r
void qpoly_divmod(QPoly num, const QPoly& den, QPoly& q, QPoly& r) {
  size_t dd = qpoly_degree(den);
  q.assign(num.size(), Rational(0));
  while (!qpoly_is_zero(num) && qpoly_degree(num) >= dd) {
    size_t dn = qpoly_degree(num);
    Rational c = num[dn] / den[dd];
    q[dn - dd] += c;
    for (size_t j = 0; j <= dd; ++j) num[dn - dd + j] -= c * den[j];
  }
  r = std::move(num);
}

} // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(errc::zero_inversion, "inverse of zero cyclotomic");
  // Extended Euclid against Phi_N in Q[x].
  const auto& phi_z = cyclotomic_polynomial(order_);
  QPoly r0(phi_z.size());
  for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
  QPoly r1(coeffs_);
  QPoly s0(1, Rational(0)), s1(1, Rational(1)); // coefficients of *this
  while (!qpoly_is_zero(r1)) {
    QPoly q, r2;
    qpoly_divmod(r0, r1, q, r2);
    // s2 = s0 - q * s1
    QPoly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd = nonzero constant (Phi_N is irreducible over Q)
  if (qpoly_degree(r0) != 0 || r0[0] == 0)
    fail(errc::internal_invariant, "cyclotomic gcd is not a unit");
  Rational unit = r0[0];
  for (auto& c : s0) c /= unit;
  return from_polynomial(order_, std::move(s0));
}

} // namespace theta
