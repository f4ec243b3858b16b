#pragma once

#include "lp2dt/pairs.hpp"
#include "lp2dt/power_series.hpp"

#include <string>
#include <vector>

namespace lp2dt {

// dim M = 1 - chi(F,F) for rank k, ch_1 = a, ch_2 = b on P^2.
long long moduli_dimension(int k, int a, int b);

// chi(Hilb^n(P^2)) = [q^n] prod (1-q^m)^{-3}.
long long hilb_chi(int n);

// Generalized invariant via the pair wall-crossing:
//   DT(X;P/2)^2 P(n)/8 - PI_n / P(n).
Rational wall_crossing_dt(int b, const Rational& pi_n, int n);

// Same quantity assembled from the strata sums:
//   chi(Hilb^{-b/2})/4 - Sum c^st - Sum c^ss / 2.
Rational theorem_dt(int b, long long sum_c_ss, long long sum_c_st);

// BPS inversion on the divisor lattice {1, 2} of this family.
Rational bps_invariant(int b, const Rational& dt_bar);

struct OddReport {
    long long chi;        // chi(M) = sum of stable stratum contributions
    long long dt_signed;  // (-1)^{dim M} chi(M); dim = -4b-3 is odd
};
OddReport odd_b_dt(int b, const std::vector<TableRow>& rows);

// Generating series. k1: rank-1 Euler characteristics; k2a1: rank 2 with
// odd first Chern class; mu: slope-stable rank 2 series.
PowerSeries series_k1(int order);
PowerSeries series_k2_a1(int order);
PowerSeries mu_stable_series(int order);

// Independent route to the slope-stable series' double sum: enumerate
// even-sum strict-triangle width triples directly.
PowerSeries triangle_triple_series(int order);

// Full report for one b.
struct InvariantReport {
    int b = 0;
    bool even = false;
    long long hilb_half = 0;  // chi(Hilb^{-b/2}) for even b
    Rational dt_bar;
    Rational dt_hat;
    long long chi_stable = 0;
    long long sum_c_ss = 0;
    long long sum_c_st = 0;
    long long rows = 0;
    Rational pi_n[2];
    int n_used[2] = {0, 0};
    long long dt_signed = 0;            // odd b only
    bool dt_hat_integral = false;       // even b
    bool c_ss_even = false;             // even b
    std::string provenance;
};

InvariantReport make_report(int b, const std::vector<TableRow>& rows, int n_override = 0);

}  // namespace lp2dt
