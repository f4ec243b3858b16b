#pragma once

#include "lp2dt/sigma.hpp"

#include <vector>

namespace lp2dt {

enum class StratumTag { Unstable, Decomposable, StrictlySemistable, Stable };

struct StratumClass {
    StratumTag tag = StratumTag::Unstable;
    std::vector<int> destabilizers;  // pattern values whose subsheaf reaches P/2
};

// All coincidence patterns of the direction variables: p-classes stay
// pairwise distinct, free components may join them or each other.
std::vector<Pattern> enumerate_patterns(int num_p_blocks, int num_free);

StratumClass classify_pattern(const SigmaModel& model, const Pattern& pattern);

// Euler characteristic of d >= 3 ordered distinct points on the
// projective line modulo the 3-transitive group action.
long long configuration_chi(int d);

// Independent check: counts distinct d-tuples over the projective line
// of F_q by enumeration and divides by |PGL_2(F_q)| = q^3 - q.
Rational fq_configuration_count(int d, int q);

// Lagrange-interpolates fq_configuration_count over enough primes
// q >= d + 2 and evaluates the counting polynomial at q = 1.
long long configuration_chi_oracle(int d);

struct CValues {
    long long c_ss = 0;
    long long c_st = 0;
};

// Euler-characteristic contributions of the indecomposable strictly
// semistable and stable strata of one Delta-family; the (2 - |D|) factor
// is the chi of the section directions allowed by the destabilizers.
CValues c_values(const SigmaModel& model);

}  // namespace lp2dt
