#include "skind/rational.hpp"

#include <cmath>
#include <limits>

#include "skind/error.hpp"

namespace skind {

namespace mp = boost::multiprecision;

long double to_long_double(const Rational& r)
{
    // Scale so both parts fit comfortably before converting.
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r);
    long shift = 0;
    const unsigned limit = 4000;
    while (mp::msb(mp::abs(num) + 1) > limit) {
        num >>= 64;
        shift += 64;
    }
    while (mp::msb(den) > limit) {
        den >>= 64;
        shift -= 64;
    }
    if (den == 0)
        return num.sign() >= 0 ? std::numeric_limits<long double>::infinity()
                               : -std::numeric_limits<long double>::infinity();
    long double a = num.convert_to<long double>();
    long double b = den.convert_to<long double>();
    return std::ldexp(a / b, static_cast<int>(shift));
}

std::int64_t floor_int(const Rational& r)
{
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num.sign() < 0 && q * den != num)
        q -= 1;
    if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
        throw CapExceeded("floor does not fit in 64 bits");
    return q.convert_to<std::int64_t>();
}

Rational exact_rational(long double x)
{
    if (!std::isfinite(x))
        throw PreconditionError("non-finite value has no exact rational form");
    if (x == 0)
        return Rational(0);
    int exp = 0;
    long double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    const int digits = std::numeric_limits<long double>::digits;
    mant = std::ldexp(mant, digits);
    exp -= digits;
    BigInt m = static_cast<std::int64_t>(0);
    // mant is an integer below 2^64 in magnitude.
    bool neg = mant < 0;
    unsigned long long u = static_cast<unsigned long long>(neg ? -mant : mant);
    m = u;
    if (neg)
        m = -m;
    Rational out(m);
    if (exp > 0)
        out *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        out /= Rational(BigInt(1) << -exp);
    return out;
}

bool is_integer(const Rational& r)
{
    return mp::denominator(r) == 1;
}

std::string to_string(const Rational& r)
{
    if (is_integer(r))
        return mp::numerator(r).str();
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

} // namespace skind
