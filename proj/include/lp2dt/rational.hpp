#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lp2dt {

// Exact arbitrary-precision rationals. cpp_rational keeps values reduced
// with a positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

// Renders "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline long long to_long(const Rational& r) {
    if (!is_integer(r)) throw Error("rational " + to_string(r) + " is not an integer");
    return static_cast<long long>(numerator(r));
}

}  // namespace lp2dt
