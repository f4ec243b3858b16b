#pragma once

#include "lp2dt/enumeration.hpp"

#include <vector>

namespace lp2dt {

// One section character: (u,v,w) with u+v+w = n, meeting the three chart
// diagrams in nonzero content at (u,v), (v,w), (w,u). `lines` collects
// the blocks of the 1-dimensional contents met; empty means all three
// are full planes (flag l = 1).
struct SectionTriple {
    int u = 0, v = 0, w = 0;
    std::vector<int> lines;

    int l() const { return lines.empty() ? 1 : 0; }
};

std::vector<SectionTriple> compatible_triples(const SigmaModel& model, int n);

// Diagram counts at level n: the number of circles plus twice the number
// of bullets per chart equals P(n) once n is beyond the special regions.
struct PairCount {
    int n = 0;
    long long circles = 0;
    long long bullets = 0;
    Rational weighted;  // sum over triples of chi of the allowed section space
};

// Per-chart count for the pattern `pattern` of a family whose strata are
// classified by `cls` semantics: weight of an l=1 triple is
// 2 - #destabilizing values, an l=0 triple contributes 1 when its forced
// direction is consistent and allowed.
PairCount chart_pair_count(const SigmaModel& model, const Pattern& pattern, int n);

// Euler characteristic of the weighted section strata summed over every
// coincidence pattern: equals P(n) * (c_ss/2 + c_st) for n large enough.
Rational stratified_pair_count(const SigmaModel& model, int n);

// Closed form for the split families I_{Z1} (+) I_{Z2}: h equals the
// number of torus-fixed points of Hilb^{-b/2}(P^2).
Rational decomposable_pair_contribution(int b, int n);

// PI_n for the full Hilbert polynomial family.
Rational pair_invariant(int b, int n, const std::vector<TableRow>& rows);

}  // namespace lp2dt
