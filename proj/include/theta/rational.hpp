#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "theta/error.hpp"

namespace theta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using i64 = long long;

// Serialized as "p/q", always in lowest terms with q > 0.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// Exact integer square root; empty if n is not a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);

Integer falling_factorial(const Integer& n, i64 k);
Integer integer_pow(const Integer& base, i64 e);

} // namespace theta
