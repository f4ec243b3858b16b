#include "lp2dt/hilbert.hpp"

#include <sstream>

namespace lp2dt {

HilbertPolynomial HilbertPolynomial::reduced() const {
    Rational lead = c2 != 0 ? c2 : (c1 != 0 ? c1 : c0);
    if (lead == 0) return *this;
    return {c2 / lead, c1 / lead, c0 / lead};
}

std::string HilbertPolynomial::str() const {
    std::ostringstream os;
    os << "(" << to_string(c2) << ")m^2 + (" << to_string(c1) << ")m + (" << to_string(c0) << ")";
    return os.str();
}

namespace {
int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
}  // namespace

int compare_polys(const HilbertPolynomial& p, const HilbertPolynomial& q) {
    if (p.c2 != q.c2) return sgn(p.c2 - q.c2);
    if (p.c1 != q.c1) return sgn(p.c1 - q.c1);
    return sgn(p.c0 - q.c0);
}

int pair_compare(const HilbertPolynomial& p, int sp, const HilbertPolynomial& q, int sq) {
    int c = compare_polys(p.reduced(), q.reduced());
    if (c != 0) return c;
    return sp - sq;
}

long long asymptotic_threshold(const HilbertPolynomial& p, const HilbertPolynomial& q) {
    // For d(m) = a m^2 + b m + c with a != 0, the sign is fixed once
    // m > (|b| + |c|) / |a|; similarly for the linear case.
    HilbertPolynomial d = p - q;
    auto mag = [](const Rational& r) { return r < 0 ? Rational(-r) : r; };
    Rational bound;
    if (d.c2 != 0)
        bound = (mag(d.c1) + mag(d.c0)) / mag(d.c2);
    else if (d.c1 != 0)
        bound = mag(d.c0) / mag(d.c1);
    else
        bound = 0;
    long long m0 = 1;
    while (Rational(m0) <= bound) ++m0;
    return m0;
}

}  // namespace lp2dt
