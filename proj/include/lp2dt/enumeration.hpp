#pragma once

#include "lp2dt/strata.hpp"

#include <vector>

namespace lp2dt {

// One canonical row of the Delta-family table for a Hilbert polynomial
// m^2 + 3m + 2 + b: a representative datum, its stratum contributions,
// and the reindexing multiplicity.
struct TableRow {
    DeltaFamilyData data;
    long long c_ss = 0;
    long long c_st = 0;
    int multiplicity = 0;
    int free_components = 0;
};

struct EnumerateOptions {
    int a_floor_override = 0;  // 0: use -( |b| + 4 )
};

// All semistable-feasible Delta-family data with Hilbert polynomial
// m^2 + 3m + 2 + b, canonicalized to Delta_1 >= Delta_2 >= Delta_3, one
// row per sigma-family (data tuples with identical chart contents are
// merged), sorted by (|A|, Delta triple descending, partitions, E).
// Rows whose every pattern is unstable or decomposable are dropped; the
// decomposable families enter the invariants through the closed-form
// pair count instead. Throws when the A sweep is still producing rows at
// the safety floor.
std::vector<TableRow> enumerate_delta_families(int b, const EnumerateOptions& opts = {});

// P(m) = m^2 + 3m + 2 + b.
HilbertPolynomial family_hilbert_polynomial(int b);

}  // namespace lp2dt
