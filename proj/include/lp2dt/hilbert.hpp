#pragma once

#include "lp2dt/rational.hpp"

#include <string>

namespace lp2dt {

// Quadratic Hilbert polynomial c2*m^2 + c1*m + c0 with exact rational
// coefficients. Ordering is lexicographic on (c2, c1, c0), which agrees
// with comparing values at m >> 0.
struct HilbertPolynomial {
    Rational c2, c1, c0;

    HilbertPolynomial() = default;
    HilbertPolynomial(Rational a2, Rational a1, Rational a0)
        : c2(std::move(a2)), c1(std::move(a1)), c0(std::move(a0)) {}

    Rational eval(long long m) const { return c2 * m * m + c1 * m + c0; }

    bool is_zero() const { return c2 == 0 && c1 == 0 && c0 == 0; }

    // Division by the leading coefficient; the comparison object of
    // Gieseker stability for sheaves of different rank.
    HilbertPolynomial reduced() const;

    HilbertPolynomial operator+(const HilbertPolynomial& o) const {
        return {c2 + o.c2, c1 + o.c1, c0 + o.c0};
    }
    HilbertPolynomial operator-(const HilbertPolynomial& o) const {
        return {c2 - o.c2, c1 - o.c1, c0 - o.c0};
    }
    HilbertPolynomial operator*(const Rational& s) const { return {c2 * s, c1 * s, c0 * s}; }

    bool operator==(const HilbertPolynomial& o) const = default;

    std::string str() const;
};

// -1 / 0 / +1 lexicographic order on (c2, c1, c0).
int compare_polys(const HilbertPolynomial& p, const HilbertPolynomial& q);

// Ordering of Joyce-Song pairs: reduced polynomials first, then the
// section flag as a symbolic positive infinitesimal (a pair whose section
// is nonzero wins ties). The infinitesimal never outweighs a strict
// polynomial inequality.
int pair_compare(const HilbertPolynomial& p, int sp, const HilbertPolynomial& q, int sq);

// Lower bound M0 such that for all m >= M0 the sign of (p - q)(m) equals
// compare_polys(p, q). Used by oracle tests.
long long asymptotic_threshold(const HilbertPolynomial& p, const HilbertPolynomial& q);

}  // namespace lp2dt
