#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skind {

// Expression templates off: values are plain numbers, which keeps template
// argument deduction in the bound formulas simple.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

long double to_long_double(const Rational& r);

/// Largest integer <= r. Throws CapExceeded if it does not fit in 64 bits.
std::int64_t floor_int(const Rational& r);

/// Exact value of a finite binary floating point number.
Rational exact_rational(long double x);

bool is_integer(const Rational& r);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

} // namespace skind
