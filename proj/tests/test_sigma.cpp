#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lp2dt/sigma.hpp"
#include "lp2dt/strata.hpp"

#include <random>

using namespace lp2dt;

namespace {

DeltaFamilyData make_data(int A, std::array<int, 3> deltas, std::array<std::vector<int>, 6> parts,
                          std::vector<std::pair<int, int>> E = {}) {
    DeltaFamilyData d;
    d.A = A;
    d.deltas = deltas;
    for (int i = 0; i < 6; ++i) d.pis[static_cast<size_t>(i)] = Partition2D(parts[static_cast<size_t>(i)]);
    d.coincidences = std::move(E);
    return d;
}

// chart supports of a rank-1 datum (quadrant at the corner minus the
// positioned partition), the three corners being (u,v), (v,w), (w,u)
bool rank1_supported(int u, int v, int w, const std::array<Partition2D, 3>& pis, int chart, Cell m) {
    Cell corner = chart == 0 ? Cell{u, v} : (chart == 1 ? Cell{v, w} : Cell{w, u});
    if (m.x < corner.x || m.y < corner.y) return false;
    return !pis[static_cast<size_t>(chart)].contains(m.x - corner.x, m.y - corner.y);
}

// Weight-space dimension count of chi(F(m)) for a rank-1 datum: lattice
// points of the twisted triangle supported in all three charts.
long long rank1_lattice_chi(int u, int v, int w, const std::array<Partition2D, 3>& pis, int m) {
    long long count = 0;
    for (int a = u - 1; a <= m + 8; ++a)
        for (int b = v - 1; b <= m + 8; ++b) {
            int c = m - a - b;
            if (!rank1_supported(u, v, w, pis, 0, {a, b})) continue;
            if (!rank1_supported(u, v, w, pis, 1, {b, c})) continue;
            if (!rank1_supported(u, v, w, pis, 2, {c, a})) continue;
            ++count;
        }
    return count;
}

// Same count for the full rank-2 model under the all-distinct pattern:
// the weight space is the intersection of the three chart contents.
long long rank2_lattice_chi(const SigmaModel& model, int m) {
    long long count = 0;
    int lo = model.data.A - 1;
    for (int a = lo; a <= m - 2 * lo + 4; ++a)
        for (int b = lo; b <= m - 2 * lo + 4; ++b) {
            int c = m - a - b;
            Content c1 = model.content(0, {a, b});
            Content c2 = model.content(1, {b, c});
            Content c3 = model.content(2, {c, a});
            if (c1.kind == ContentKind::Zero || c2.kind == ContentKind::Zero ||
                c3.kind == ContentKind::Zero)
                continue;
            int block = -1;
            bool dead = false;
            for (const Content& cc : {c1, c2, c3}) {
                if (cc.kind != ContentKind::Line) continue;
                if (block == -1) block = cc.block;
                else if (block != cc.block) dead = true;
            }
            if (dead) continue;
            count += (block == -1) ? 2 : 1;
        }
    return count;
}

Pattern all_distinct_pattern(const SigmaModel& model) {
    auto patterns = enumerate_patterns(model.num_p_blocks, model.free_component_count());
    Pattern best = patterns.front();
    for (const Pattern& p : patterns)
        if (p.num_values > best.num_values) best = p;
    return best;
}

}  // namespace

TEST_CASE("rank-1 chern values and the lattice counting oracle") {
    std::array<Partition2D, 3> empty{};
    auto ch = rank1_chern(0, 0, 0, empty);
    CHECK(ch.c1 == 0);
    CHECK(ch.c2 == 0);
    CHECK(hilbert_from_chern(ch) == HilbertPolynomial{rat(1, 2), rat(3, 2), rat(1)});

    std::array<Partition2D, 3> one_box{Partition2D({1}), Partition2D{}, Partition2D{}};
    auto ch1 = rank1_chern(0, 0, 0, one_box);
    CHECK(ch1.c1 == 0);
    CHECK(ch1.c2 == -1);

    auto ch2 = rank1_chern(0, 1, 2, empty);
    CHECK(ch2.c1 == -3);
    CHECK(ch2.c2 == Rational(9, 2));

    // randomized oracle: fit chi(F(m)) at three large m against the formula
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> uvw(-2, 2);
    std::uniform_int_distribution<int> psize(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int u = uvw(rng), v = uvw(rng), w = uvw(rng);
        std::array<Partition2D, 3> pis;
        for (auto& p : pis) {
            const auto& all = enumerate_partitions(psize(rng));
            p = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
        }
        HilbertPolynomial P = hilbert_from_chern(rank1_chern(u, v, w, pis));
        for (int m = 12; m <= 14; ++m)
            CHECK(P.eval(m) == rank1_lattice_chi(u, v, w, pis, m));
    }
}

TEST_CASE("rank-2 chern values") {
    // A=-2, Delta=(2,1,1), one box: the b = -2 family of the worked example
    auto toric = make_data(-2, {2, 1, 1}, {{{1}, {}, {}, {}, {}, {}}});
    auto ch = rank2_chern(toric);
    CHECK(ch.c1 == 0);
    CHECK(ch.c2 == -2);
    CHECK(hilbert_from_chern(ch) == HilbertPolynomial{rat(1), rat(3), rat(0)});

    auto trivial = make_data(0, {0, 0, 0}, {});
    CHECK(rank2_chern(trivial).c2 == 0);
    CHECK(hilbert_from_chern(rank2_chern(trivial)) == HilbertPolynomial{rat(1), rat(3), rat(2)});

    auto row68 =
        make_data(-2, {2, 1, 1}, {{{2}, {1, 1}, {}, {}, {}, {}}}, {{1, 2}});
    CHECK(rank2_chern(row68).c1 == 0);
    CHECK(rank2_chern(row68).c2 == -4);
}

TEST_CASE("worked example: contents of the one-box b=-2 family") {
    auto data = make_data(-2, {2, 1, 1}, {{{1}, {}, {}, {}, {}, {}}});
    auto model = build_sigma_model(data);
    CHECK(model.num_p_blocks == 3);
    CHECK(model.free_component_count() == 0);

    int p1 = model.slot_block[0];

    // the box at (0,1) sits inside the vertical strip and vanishes
    CHECK(model.content(0, {0, 1}) == Content{ContentKind::Zero, -1});
    // above it the strip resumes with direction p1
    CHECK(model.content(0, {0, 2}) == Content{ContentKind::Line, p1});
    // corner box of chart 1 is p1 meet p2 = 0
    CHECK(model.content(0, {0, 0}) == Content{ContentKind::Zero, -1});
    CHECK(model.content(0, {1, 0}) == Content{ContentKind::Zero, -1});
    // horizontal strip carries p2
    CHECK(model.content(0, {2, 0}) == Content{ContentKind::Line, model.slot_block[1]});
    CHECK(model.content(0, {2, 1}) == Content{ContentKind::Full, -1});
    CHECK(model.content(0, {-1, 3}) == Content{ContentKind::Zero, -1});

    // chart 2 has no partitions: strips and the full region only
    CHECK(model.content(1, {0, 5}) == Content{ContentKind::Line, model.slot_block[1]});
    CHECK(model.content(1, {3, -2}) == Content{ContentKind::Line, model.slot_block[2]});
    CHECK(model.content(1, {1, -1}) == Content{ContentKind::Full, -1});
    CHECK(model.content(1, {0, -2}) == Content{ContentKind::Zero, -1});

    // the p1 subsheaf reaches exactly P/2: strictly semistable family
    Pattern pat = all_distinct_pattern(model);
    HilbertPolynomial half = model.hilbert * rat(1, 2);
    CHECK(compare_polys(destabilizer_polynomial(model, pat, p1), half) == 0);
    CHECK(compare_polys(destabilizer_polynomial(model, pat, model.slot_block[1]), half) < 0);
    CHECK(compare_polys(destabilizer_polynomial(model, pat, model.slot_block[2]), half) < 0);
    CHECK(compare_polys(destabilizer_polynomial(model, pat, -1), half) < 0);

    auto cv = c_values(model);
    CHECK(cv.c_ss == 1);
    CHECK(cv.c_st == 0);
}

TEST_CASE("four-variable family: two boxes per outer chart") {
    // A=-1, Delta=(1,1,0), single boxes on both sides of charts 2 and 3
    auto data = make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {1}, {1}, {1}}});
    auto model = build_sigma_model(data);
    CHECK(model.num_p_blocks == 2);
    CHECK(model.free_component_count() == 2);

    // chart 2: the vertical-side box vanishes inside the strip, the
    // horizontal-side box is a free component
    CHECK(model.content(1, {0, -1}) == Content{ContentKind::Zero, -1});
    Content s = model.content(1, {1, -1});
    CHECK(s.kind == ContentKind::Line);
    CHECK(s.block >= model.num_p_blocks);
    // chart 3: same shape rotated
    CHECK(model.content(2, {-1, 0}) == Content{ContentKind::Zero, -1});
    Content r = model.content(2, {-1, 1});
    CHECK(r.kind == ContentKind::Line);
    CHECK(r.block >= model.num_p_blocks);
    CHECK(r.block != s.block);

    auto cv = c_values(model);
    CHECK(cv.c_ss == 4);
    CHECK(cv.c_st == 0);
}

TEST_CASE("one free component forced cases: domino charts") {
    // chart-2 box + horizontal domino, chart-3 box forced to p1
    auto fig_row7 = make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {2}, {1}, {}}});
    auto model = build_sigma_model(fig_row7);
    CHECK(model.free_component_count() == 1);
    // the two domino cells share one free direction
    Content a = model.content(1, {1, -1});
    Content b = model.content(1, {2, -1});
    CHECK(a.kind == ContentKind::Line);
    CHECK(a == b);
    CHECK(a.block >= model.num_p_blocks);
    // the chart-3 box touches the horizontal strip from above: forced p1
    CHECK(model.content(2, {-1, 1}) == Content{ContentKind::Line, model.slot_block[0]});

    auto cv = c_values(model);
    CHECK(cv.c_ss == 1);
    CHECK(cv.c_st == 0);

    // triple domino instead: the stable case
    auto fig_row34 = make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {3}, {}, {}}});
    auto model34 = build_sigma_model(fig_row34);
    CHECK(model34.free_component_count() == 1);
    auto cv34 = c_values(model34);
    CHECK(cv34.c_ss == 0);
    CHECK(cv34.c_st == 1);
}

TEST_CASE("coincident directions: degenerate chart repositioning") {
    // A=-2, Delta=(2,1,1), p2 = p3; horizontal domino and vertical domino
    // in chart 1
    auto row68 = make_data(-2, {2, 1, 1}, {{{2}, {1, 1}, {}, {}, {}, {}}}, {{1, 2}});
    auto model = build_sigma_model(row68);
    CHECK(model.num_p_blocks == 2);
    CHECK(model.free_component_count() == 1);

    int q = model.slot_block[1];
    CHECK(model.slot_block[2] == q);

    // chart 2 is degenerate: its corner box carries the common direction
    CHECK(model.charts[1].degenerate);
    CHECK(model.content(1, {0, -2}) == Content{ContentKind::Line, q});
    CHECK(model.content(1, {0, 0}) == Content{ContentKind::Line, q});
    CHECK(model.content(1, {1, -1}) == Content{ContentKind::Full, -1});

    // chart 1: strip cells of both partitions vanish, the outer domino
    // cell is free
    CHECK(model.content(0, {0, 1}) == Content{ContentKind::Zero, -1});
    CHECK(model.content(0, {1, 1}) == Content{ContentKind::Zero, -1});
    CHECK(model.content(0, {2, 0}) == Content{ContentKind::Zero, -1});
    Content f = model.content(0, {2, 1});
    CHECK(f.kind == ContentKind::Line);
    CHECK(f.block >= model.num_p_blocks);

    auto cv = c_values(model);
    CHECK(cv.c_ss == 1);
    CHECK(cv.c_st == 0);
}

TEST_CASE("overlapping positioned partitions vanish and merge families") {
    // chart-3 single box over a vertical column: the covered cell is zero
    // and the column's top cell stays free
    auto a = make_data(-1, {1, 1, 0}, {{{}, {}, {}, {}, {1}, {1, 1, 1}}});
    auto ma = build_sigma_model(a);
    CHECK(ma.content(2, {-1, 0}) == Content{ContentKind::Zero, -1});
    CHECK(ma.content(2, {-1, 1}) == Content{ContentKind::Zero, -1});
    CHECK(ma.content(2, {-1, 2}).kind == ContentKind::Line);
    CHECK(ma.free_component_count() == 1);

    // the same family through the other splitting of the covered region
    auto b = make_data(-1, {1, 1, 0}, {{{}, {}, {}, {}, {1, 1}, {1, 1}}});
    CHECK(build_sigma_model(b).fingerprint() == ma.fingerprint());
}

TEST_CASE("rank-2 lattice oracle: chart contents count the Hilbert polynomial") {
    std::vector<DeltaFamilyData> samples = {
        make_data(-2, {2, 1, 1}, {{{1}, {}, {}, {}, {}, {}}}),
        make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {1}, {1}, {1}}}),
        make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {2}, {1}, {}}}),
        make_data(-2, {2, 1, 1}, {{{2}, {1, 1}, {}, {}, {}, {}}}, {{1, 2}}),
        make_data(-3, {3, 2, 1}, {{{1, 1}, {}, {}, {}, {}, {}}}),
        make_data(-3, {2, 2, 2}, {{{}, {}, {1}, {}, {}, {}}}),
        // strip-forced components and an overlapping split
        make_data(-2, {2, 1, 1}, {{{}, {}, {3}, {}, {}, {}}}),
        make_data(-1, {1, 1, 0}, {{{1}, {}, {1}, {1}, {1}, {}}}),
        make_data(-1, {1, 1, 0}, {{{}, {}, {}, {}, {1}, {1, 1, 1}}}),
    };
    for (const auto& data : samples) {
        auto model = build_sigma_model(data);
        for (int m = 9; m <= 11; ++m)
            CHECK(model.hilbert.eval(m) == rank2_lattice_chi(model, m));
    }
}

TEST_CASE("reindexing invariance of the stratum contributions") {
    std::vector<DeltaFamilyData> samples = {
        make_data(-2, {2, 1, 1}, {{{1}, {}, {}, {}, {}, {}}}),
        make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {1}, {1}, {1}}}),
        make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {2}, {1}, {}}}),
        make_data(-2, {2, 1, 1}, {{{2}, {1, 1}, {}, {}, {}, {}}}, {{1, 2}}),
    };
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {1, 0, 2},
                                                   {0, 2, 1},
                                                   {2, 1, 0}}};
    for (const auto& data : samples) {
        auto base = c_values(build_sigma_model(data));
        for (const auto& perm : perms) {
            DeltaFamilyData moved = reindex(data, perm);
            moved.validate();
            auto model = build_sigma_model(moved);
                    auto cv = c_values(model);
            CHECK(cv.c_ss == base.c_ss);
            CHECK(cv.c_st == base.c_st);
            CHECK(model.hilbert == build_sigma_model(data).hilbert);
        }
    }
}

TEST_CASE("strict triangle inequality families are entirely stable") {
    auto data = make_data(-3, {2, 2, 2}, {{{1}, {}, {}, {}, {}, {}}});
    auto model = build_sigma_model(data);
    for (const Pattern& pattern : enumerate_patterns(model.num_p_blocks, model.free_component_count()))
        CHECK(classify_pattern(model, pattern).tag == StratumTag::Stable);
    auto cv = c_values(model);
    CHECK(cv.c_st == (1LL << model.free_component_count()));
    CHECK(cv.c_ss == 0);
}
