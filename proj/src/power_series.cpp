#include "lp2dt/power_series.hpp"

#include <sstream>

namespace lp2dt {

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    if (order() != o.order()) throw Error("series order mismatch");
    PowerSeries r(order());
    for (int n = 0; n <= order(); ++n) r[n] = (*this)[n] + o[n];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    if (order() != o.order()) throw Error("series order mismatch");
    PowerSeries r(order());
    for (int n = 0; n <= order(); ++n) r[n] = (*this)[n] - o[n];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    if (order() != o.order()) throw Error("series order mismatch");
    PowerSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if ((*this)[i] == 0) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o[j] == 0) continue;
            r[i + j] += (*this)[i] * o[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if ((*this)[0] == 0) throw Error("series with zero constant term has no inverse");
    PowerSeries r(order());
    Rational lead = Rational(1) / (*this)[0];
    r[0] = lead;
    for (int n = 1; n <= order(); ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j) acc += (*this)[j] * r[n - j];
        r[n] = -acc * lead;
    }
    return r;
}

PowerSeries PowerSeries::truncate(int order) const {
    if (order > this->order()) throw Error("cannot extend a truncated series");
    PowerSeries r(order);
    for (int n = 0; n <= order; ++n) r[n] = (*this)[n];
    return r;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        if ((*this)[n] == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string((*this)[n]) << ")q^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << order() + 1 << ")";
    return os.str();
}

PowerSeries eta_power_series(int exponent, int order) {
    PowerSeries r = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        if (exponent > 0) {
            // multiply by (1 - q^n), |exponent| times
            for (int rep = 0; rep < exponent; ++rep) {
                for (int i = order; i >= n; --i) r[i] -= r[i - n];
            }
        } else if (exponent < 0) {
            // multiply by 1/(1 - q^n) = sum_k q^{kn}
            for (int rep = 0; rep < -exponent; ++rep) {
                for (int i = n; i <= order; ++i) r[i] += r[i - n];
            }
        }
    }
    return r;
}

PowerSeries lambert_double_sum(LambertKind kind, int order) {
    PowerSeries r(order);
    for (int m = 1; m <= order; ++m) {
        for (int n = 1; n <= order; ++n) {
            long long base, step;
            if (kind == LambertKind::A1) {
                base = 1LL * m * n;
                step = m + n - 1;
            } else {
                base = 1LL * m * n + m + n;
                step = m + n;
            }
            if (base > order) break;
            for (long long t = base; t <= order; t += step) r[static_cast<int>(t)] += 1;
        }
    }
    return r;
}

}  // namespace lp2dt
