#pragma once

#include "lp2dt/hilbert.hpp"
#include "lp2dt/partitions.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace lp2dt {

// Discrete datum classifying a rank-2 torus-equivariant torsion-free
// sheaf on P^2 up to equivariant line bundle twist: an integer A,
// nonnegative widths Delta_1..Delta_3, six 2d partitions (two per chart)
// and the record of which nonzero direction subspaces p_i coincide.
//
// Partition layout: pis[2j] is chart j's partition on the vertical-axis
// side (value p_{j+1} strip runs under it), pis[2j+1] the one on the
// horizontal-axis side. Chart origins are (0,0), (0,A), (A,0); chart j
// has the vertical strip of width Delta_{j+1} and the horizontal strip
// of height Delta_{j+2} (indices mod 3, 0-based).
struct DeltaFamilyData {
    int A = 0;
    std::array<int, 3> deltas{};
    std::array<Partition2D, 6> pis{};
    std::vector<std::pair<int, int>> coincidences;  // sorted 0-based pairs i<j with p_i == p_j

    // class id per slot: min slot index of the coincidence class, or -1
    // when Delta_i == 0 (p_i = 0).
    std::array<int, 3> pclass() const;

    void validate() const;

    bool operator==(const DeltaFamilyData&) const = default;

    std::string str() const;
};

// Action of S3 on the data by reindexing the Delta slots; perm[i] is the
// old slot shown at new slot i. Even permutations rotate the charts,
// odd ones also transpose each diagram.
DeltaFamilyData reindex(const DeltaFamilyData& data, const std::array<int, 3>& perm);

// Number of distinct permutations of the Delta triple; the multiplicity
// a canonical (sorted-Delta) row carries in the tables.
int reindex_multiplicity(const std::array<int, 3>& deltas);

struct ChernCharacter {
    int rank = 0;
    long long c1 = 0;  // coefficient of the hyperplane class
    Rational c2;       // coefficient of the point class
};

ChernCharacter rank1_chern(int u, int v, int w, const std::array<Partition2D, 3>& pis);
ChernCharacter rank2_chern(const DeltaFamilyData& data);

// Riemann-Roch on P^2: P(m) = r(m+1)(m+2)/2 + c1(m + 3/2) + c2.
HilbertPolynomial hilbert_from_chern(const ChernCharacter& ch);

}  // namespace lp2dt
