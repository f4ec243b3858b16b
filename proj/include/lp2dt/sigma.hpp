#pragma once

#include "lp2dt/delta_family.hpp"

#include <map>
#include <string>
#include <vector>

namespace lp2dt {

enum class ContentKind { Zero, Line, Full };

// Graded piece of the sheaf at one character: zero, a 1-dimensional
// direction tagged by its block, or all of C^2. Blocks 0..num_p_blocks-1
// are the coincidence classes of the p_i; higher ids are the free
// components C_1..C_k.
struct Content {
    ContentKind kind = ContentKind::Zero;
    int block = -1;

    bool operator==(const Content&) const = default;
};

// A coincidence pattern: every p-class keeps its own value (pairwise
// distinct), each free component is assigned either a p-class value or a
// shared "new" value. Values are numbered 0..num_values-1 with the
// p-classes first.
struct Pattern {
    int num_p_blocks = 0;
    std::vector<int> svalue;
    int num_values = 0;

    int value_of_block(int block) const {
        return block < num_p_blocks ? block : svalue[static_cast<size_t>(block - num_p_blocks)];
    }
};

// Chart-wise evaluation of the sigma-family rules for one Delta-family
// datum. Building the model resolves every partition cell into zero,
// forced line, or free component content; everything outside the finite
// special region follows from the strip geometry.
struct SigmaModel {
    DeltaFamilyData data;
    HilbertPolynomial hilbert;  // of the rank-2 sheaf
    int num_p_blocks = 0;
    std::array<int, 3> slot_block{-1, -1, -1};  // Delta slot -> p-block id

    struct Chart {
        Cell origin;
        int dv = 0, dh = 0;          // vertical strip width, horizontal strip height
        int vblock = -1, hblock = -1;  // block carried by each strip (-1: empty strip)
        bool degenerate = false;       // the two strip directions coincide
        std::map<Cell, Content> special;
    };
    std::array<Chart, 3> charts;

    struct FreeComponent {
        int chart;
        CellSet cells;
    };
    std::vector<FreeComponent> comps;

    int free_component_count() const { return static_cast<int>(comps.size()); }
    int total_blocks() const { return num_p_blocks + free_component_count(); }

    Content content(int chart, Cell m) const;

    // Canonical serialization of the chart contents; two data tuples
    // describing the same sigma-family share a fingerprint.
    std::string fingerprint() const;

    // A level n at which every compatible section triple meets only
    // resolved content (used to pick the default pair-counting level).
    int suggested_level() const;
};

// Builds the chart contents of a datum. Distinct data tuples can carry
// the same sigma-family (cells covered by both partitions of a chart
// vanish, so splittings of the covered region are not unique); compare
// fingerprints to identify families. Throws on malformed data.
SigmaModel build_sigma_model(const DeltaFamilyData& data);

// Hilbert polynomial of the maximal rank-1 subsheaf generated by a
// direction: `value` indexes a pattern value, or -1 for a direction
// different from every p_i and s_i. The subsheaf's chart supports are
// the cells whose content contains the direction.
HilbertPolynomial destabilizer_polynomial(const SigmaModel& model, const Pattern& pattern, int value);

}  // namespace lp2dt
