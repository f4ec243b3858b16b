#pragma once

#include "lp2dt/rational.hpp"

#include <string>
#include <vector>

namespace lp2dt {

// Formal power series in q truncated at a fixed order, with exact
// rational coefficients. All arithmetic is exact through the truncation
// order of the result.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeff_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw Error("negative series order");
    }

    static PowerSeries one(int order) {
        PowerSeries s(order);
        s.coeff_[0] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& operator[](int n) const { return coeff_.at(static_cast<size_t>(n)); }
    Rational& operator[](int n) { return coeff_.at(static_cast<size_t>(n)); }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;

    // Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    PowerSeries truncate(int order) const;

    bool operator==(const PowerSeries& o) const = default;

    std::string str() const;

private:
    std::vector<Rational> coeff_;  // coeff_[n] multiplies q^n
};

// prod_{n >= 1} (1 - q^n)^exponent, exact through the given order.
PowerSeries eta_power_series(int exponent, int order);

enum class LambertKind {
    A1,  // sum_{m,n >= 1} q^{mn} / (1 - q^{m+n-1})
    Mu,  // sum_{m,n >= 1} q^{mn+m+n} / (1 - q^{m+n})
};

// Double Lambert-type sums, truncated so that every dropped term has
// exponent beyond the requested order.
PowerSeries lambert_double_sum(LambertKind kind, int order);

}  // namespace lp2dt
