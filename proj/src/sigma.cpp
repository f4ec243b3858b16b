#include "lp2dt/sigma.hpp"

#include <algorithm>
#include <sstream>

namespace lp2dt {

namespace {

// Subspace containment test, block-wise: must hold for every choice of
// pattern, so two distinct line blocks are never nested.
bool content_leq(const Content& a, const Content& b) {
    if (a.kind == ContentKind::Zero) return true;
    if (a.kind == ContentKind::Full) return b.kind == ContentKind::Full;
    return b.kind == ContentKind::Full || (b.kind == ContentKind::Line && b.block == a.block);
}

}  // namespace

Content SigmaModel::content(int chart, Cell m) const {
    const Chart& ch = charts[static_cast<size_t>(chart)];
    if (m.x < ch.origin.x || m.y < ch.origin.y) return {ContentKind::Zero, -1};
    auto it = ch.special.find(m);
    if (it != ch.special.end()) return it->second;
    bool in_v = m.x < ch.origin.x + ch.dv;
    bool in_h = m.y < ch.origin.y + ch.dh;
    if (in_v && in_h) {
        // corner box: p_j cap p_{j+1}
        if (ch.degenerate) return {ContentKind::Line, ch.vblock};
        return {ContentKind::Zero, -1};
    }
    if (in_v) return {ContentKind::Line, ch.vblock};
    if (in_h) return {ContentKind::Line, ch.hblock};
    return {ContentKind::Full, -1};
}

std::string SigmaModel::fingerprint() const {
    std::ostringstream os;
    os << data.A << "|" << data.deltas[0] << "," << data.deltas[1] << "," << data.deltas[2] << "|";
    auto cls = data.pclass();
    os << cls[0] << cls[1] << cls[2];
    for (int j = 0; j < 3; ++j) {
        os << "|";
        for (const auto& [cell, c] : charts[static_cast<size_t>(j)].special) {
            os << cell.x << "," << cell.y << ":";
            switch (c.kind) {
                case ContentKind::Zero: os << "z"; break;
                case ContentKind::Line: os << "l" << c.block; break;
                case ContentKind::Full: os << "f"; break;
            }
            os << ";";
        }
    }
    return os.str();
}

int SigmaModel::suggested_level() const {
    // Far enough that every chart's special region and strips lie inside
    // the triangle of section characters.
    int reach = 0;
    for (int j = 0; j < 3; ++j) {
        const Chart& ch = charts[static_cast<size_t>(j)];
        int mx = ch.origin.x + ch.dv, my = ch.origin.y + ch.dh;
        for (const auto& [cell, c] : ch.special) {
            mx = std::max(mx, cell.x + 1);
            my = std::max(my, cell.y + 1);
        }
        reach = std::max(reach, mx + my);
    }
    return std::max(reach - data.A + 1, 1 - 2 * data.A);
}

SigmaModel build_sigma_model(const DeltaFamilyData& data) {
    data.validate();
    SigmaModel model;
    model.data = data;
    model.hilbert = hilbert_from_chern(rank2_chern(data));

    auto cls = data.pclass();
    // p-blocks: coincidence classes among the nonzero slots, in slot order
    for (int s = 0; s < 3; ++s) {
        int c = cls[static_cast<size_t>(s)];
        if (c < 0) continue;
        if (c == s) model.slot_block[static_cast<size_t>(s)] = model.num_p_blocks++;
        else model.slot_block[static_cast<size_t>(s)] = model.slot_block[static_cast<size_t>(c)];
    }

    const Cell origins[3] = {{0, 0}, {0, data.A}, {data.A, 0}};
    for (int j = 0; j < 3; ++j) {
        auto& ch = model.charts[static_cast<size_t>(j)];
        int sv = j, sh = (j + 1) % 3;  // vertical strip slot, horizontal strip slot
        ch.origin = origins[j];
        ch.dv = data.deltas[static_cast<size_t>(sv)];
        ch.dh = data.deltas[static_cast<size_t>(sh)];
        ch.vblock = model.slot_block[static_cast<size_t>(sv)];
        ch.hblock = model.slot_block[static_cast<size_t>(sh)];
        ch.degenerate = ch.vblock >= 0 && ch.vblock == ch.hblock;

        // Partition placement: next to its strip in the generic case,
        // pulled back to the corner / pushed to the full quadrant when
        // the two strip directions coincide.
        Cell pos1, pos2;
        if (!ch.degenerate) {
            pos1 = {ch.origin.x, ch.origin.y + ch.dh};
            pos2 = {ch.origin.x + ch.dv, ch.origin.y};
        } else {
            pos1 = ch.origin;
            pos2 = {ch.origin.x + ch.dv, ch.origin.y + ch.dh};
        }
        CellSet cells1 = data.pis[static_cast<size_t>(2 * j)].cells_at(pos1);
        CellSet cells2 = data.pis[static_cast<size_t>(2 * j + 1)].cells_at(pos2);
        CellSet both = cellset_intersection(cells1, cells2);
        CellSet all = cellset_union(cells1, cells2);

        auto in_v = [&](Cell c) { return c.x < ch.origin.x + ch.dv; };
        auto in_h = [&](Cell c) { return c.y < ch.origin.y + ch.dh; };

        // (F1): cells covered by both partitions and partition cells
        // inside a strip vanish
        CellSet outside;
        for (Cell c : all) {
            if (c.x < ch.origin.x || c.y < ch.origin.y)
                throw Error("partition cell left/below its chart origin");
            if (cellset_contains(both, c) || in_v(c) || in_h(c))
                ch.special[c] = {ContentKind::Zero, -1};
            else outside.push_back(c);
        }

        // A strip cell still carrying the strip's direction (used for the
        // adjacency forcing of (F4)).
        auto is_strip_value_cell = [&](Cell c, bool vertical) {
            if (c.x < ch.origin.x || c.y < ch.origin.y) return false;
            if (cellset_contains(all, c)) return false;
            bool v = in_v(c), h = in_h(c);
            if (ch.degenerate) return v || h;
            return vertical ? (v && !h) : (h && !v);
        };
        auto touches = [&](const CellSet& comp, bool vertical) {
            for (Cell c : comp) {
                const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
                for (Cell nb : nbrs)
                    if (is_strip_value_cell(nb, vertical)) return true;
            }
            return false;
        };

        // (F4)/(F5): remaining components are forced to a strip direction
        // or free
        for (const CellSet& comp : connected_components(outside)) {
            int forced = -1;
            if (ch.degenerate) {
                if (ch.vblock >= 0 && touches(comp, true)) forced = ch.vblock;
            } else {
                bool in1 = std::all_of(comp.begin(), comp.end(),
                                       [&](Cell c) { return cellset_contains(cells1, c); });
                bool in2 = std::all_of(comp.begin(), comp.end(),
                                       [&](Cell c) { return cellset_contains(cells2, c); });
                if (!in1 && !in2) throw Error("mixed component in a non-degenerate chart");
                if (in2 && ch.vblock >= 0 && touches(comp, true)) forced = ch.vblock;
                else if (in1 && ch.hblock >= 0 && touches(comp, false)) forced = ch.hblock;
            }
            int block = forced;
            if (block < 0) {
                block = model.num_p_blocks + static_cast<int>(model.comps.size());
                model.comps.push_back({j, comp});
            }
            for (Cell c : comp) ch.special[c] = {ContentKind::Line, block};
        }
    }

    // Monotonicity audit over the special window: catches any rule
    // violation immediately.
    for (int j = 0; j < 3; ++j) {
        const auto& ch = model.charts[static_cast<size_t>(j)];
        int mx = ch.origin.x + ch.dv + 1, my = ch.origin.y + ch.dh + 1;
        for (const auto& [cell, c] : ch.special) {
            mx = std::max(mx, cell.x + 2);
            my = std::max(my, cell.y + 2);
        }
        for (int x = ch.origin.x - 1; x <= mx; ++x)
            for (int y = ch.origin.y - 1; y <= my; ++y) {
                Content here = model.content(j, {x, y});
                if (!content_leq(here, model.content(j, {x + 1, y})) ||
                    !content_leq(here, model.content(j, {x, y + 1})))
                    throw Error("sigma-family not monotone at " + model.data.str());
            }
    }
    return model;
}

HilbertPolynomial destabilizer_polynomial(const SigmaModel& model, const Pattern& pattern, int value) {
    // Chart quadrant corners: the strip belongs to the subsheaf exactly
    // when its direction equals the chosen value.
    int xmin[3], ymin[3];
    for (int j = 0; j < 3; ++j) {
        const auto& ch = model.charts[static_cast<size_t>(j)];
        bool vin = ch.vblock >= 0 && value >= 0 && pattern.value_of_block(ch.vblock) == value;
        bool hin = ch.hblock >= 0 && value >= 0 && pattern.value_of_block(ch.hblock) == value;
        xmin[j] = ch.origin.x + (vin ? 0 : ch.dv);
        ymin[j] = ch.origin.y + (hin ? 0 : ch.dh);
    }
    // corners are (u,v), (v,w), (w,u)
    if (xmin[1] != ymin[0] || xmin[2] != ymin[1] || xmin[0] != ymin[2])
        throw Error("inconsistent subsheaf corners");
    int u = xmin[0], v = ymin[0], w = ymin[1];

    long long missing = 0;
    for (int j = 0; j < 3; ++j) {
        const auto& ch = model.charts[static_cast<size_t>(j)];
        for (const auto& [cell, c] : ch.special) {
            if (cell.x < xmin[j] || cell.y < ymin[j]) continue;
            bool holds = c.kind == ContentKind::Full ||
                         (c.kind == ContentKind::Line && value >= 0 &&
                          pattern.value_of_block(c.block) == value);
            if (!holds) ++missing;
        }
    }
    long long s = u + v + w;
    return hilbert_from_chern({1, -s, Rational(s * s, 2) - missing});
}

}  // namespace lp2dt
