#pragma once

#include "lp2dt/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace lp2dt {

// A lattice unit box addressed by its lower-left corner.
struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

using CellSet = std::vector<Cell>;  // kept sorted and unique

// 2d partition stored as weakly decreasing row lengths; row y has cells
// (0..parts[y]-1, y), so the diagram sits in the first-quadrant corner.
struct Partition2D {
    std::vector<int> parts;

    Partition2D() = default;
    explicit Partition2D(std::vector<int> p);

    int size() const;
    bool empty() const { return parts.empty(); }
    bool contains(int x, int y) const {
        return y >= 0 && y < static_cast<int>(parts.size()) && x >= 0 && x < parts[static_cast<size_t>(y)];
    }

    CellSet cells() const;
    CellSet cells_at(Cell corner) const;

    Partition2D transposed() const;

    auto operator<=>(const Partition2D&) const = default;

    std::string str() const;  // "[3,1,1]", "[]" for empty
};

// All partitions of size exactly n, deterministic order, memoized.
const std::vector<Partition2D>& enumerate_partitions(int n);

// Number of k-tuples of partitions with total size n (chi of the
// torus-fixed locus of Hilb^n for k = 3); brute-force enumeration, used
// as the independent oracle against eta_power_series(-k, N).
long long partition_tuple_count(int k, int n);

void cellset_normalize(CellSet& s);
bool cellset_contains(const CellSet& s, Cell c);
CellSet cellset_union(const CellSet& a, const CellSet& b);
CellSet cellset_intersection(const CellSet& a, const CellSet& b);
CellSet cellset_difference(const CellSet& a, const CellSet& b);

// Edge-adjacency components (cells sharing an edge are connected, corner
// contact is not), ordered by their smallest cell.
std::vector<CellSet> connected_components(const CellSet& s);

// True iff some cell of a shares an edge with some cell of b.
bool adjacent(const CellSet& a, const CellSet& b);

}  // namespace lp2dt
