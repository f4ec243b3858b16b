#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lp2dt/enumeration.hpp"
#include "lp2dt/strata.hpp"

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

}  // namespace

TEST_CASE("configuration chi values and the finite field oracle") {
    CHECK(configuration_chi(3) == 1);
    CHECK(configuration_chi(4) == -1);
    CHECK(configuration_chi(5) == 2);
    CHECK(configuration_chi(6) == -6);
    CHECK_THROWS(configuration_chi(2));

    // d = 3: one orbit over any field
    CHECK(fq_configuration_count(3, 5) == 1);
    CHECK(fq_configuration_count(3, 7) == 1);
    // d = 4: the count interpolates to q - 2
    CHECK(fq_configuration_count(4, 7) == 5);
    for (int d = 3; d <= 7; ++d) CHECK(configuration_chi_oracle(d) == configuration_chi(d));
}

TEST_CASE("pattern enumeration counts") {
    CHECK(enumerate_patterns(3, 0).size() == 1);
    CHECK(enumerate_patterns(3, 1).size() == 4);   // join p1/p2/p3 or stay new
    CHECK(enumerate_patterns(3, 2).size() == 17);  // 4*4 joins plus the shared new value
    CHECK(enumerate_patterns(2, 1).size() == 3);
    for (const Pattern& p : enumerate_patterns(2, 3)) {
        CHECK(p.num_values >= 2);
        for (int v : p.svalue) CHECK(v < p.num_values);
    }
}

TEST_CASE("partition of the configuration space: chi sums to 2^k") {
    for (int np = 3; np <= 3; ++np)
        for (int k = 0; k <= 4; ++k) {
            long long total = 0;
            for (const Pattern& p : enumerate_patterns(np, k)) total += configuration_chi(p.num_values);
            CHECK(total == (1LL << k));
        }
}

TEST_CASE("classification of the walked-through families") {
    // the one-box b=-2 family: one pattern, strictly semistable with the
    // p1 subsheaf at P/2
    auto toric = build_sigma_model(make_data(-2, {2, 1, 1}, {{{1}, {}, {}, {}, {}, {}}}));
    auto patterns = enumerate_patterns(toric.num_p_blocks, toric.free_component_count());
    REQUIRE(patterns.size() == 1);
    auto cls = classify_pattern(toric, patterns[0]);
    CHECK(cls.tag == StratumTag::StrictlySemistable);
    CHECK(cls.destabilizers == std::vector<int>{toric.slot_block[0]});

    // the four-variable family: join both frees to distinct p's ->
    // decomposable; join one -> strictly semistable; keep both new ->
    // stable strata of chi 1 and -1
    auto row1 = build_sigma_model(make_data(-1, {1, 1, 0}, {{{}, {}, {1}, {1}, {1}, {1}}}));
    int n_dec = 0, n_ss = 0, n_st = 0, n_un = 0;
    for (const Pattern& p : enumerate_patterns(row1.num_p_blocks, row1.free_component_count())) {
        switch (classify_pattern(row1, p).tag) {
            case StratumTag::Decomposable: ++n_dec; break;
            case StratumTag::StrictlySemistable: ++n_ss; break;
            case StratumTag::Stable: ++n_st; break;
            case StratumTag::Unstable: ++n_un; break;
        }
    }
    CHECK(n_dec == 2);  // s1, s2 joining p, q in either order
    CHECK(n_ss == 4);
    CHECK(n_st == 2);  // both new: shared or distinct
    CHECK(n_un == 2);  // both frees equal to the same p (or the same q)
}

TEST_CASE("stratum chi against the oracle on every pattern of small tables") {
    for (int b : {-2, -4}) {
        for (const TableRow& row : enumerate_delta_families(b)) {
            auto model = build_sigma_model(row.data);
            for (const Pattern& p : enumerate_patterns(model.num_p_blocks, model.free_component_count())) {
                auto cls = classify_pattern(model, p);
                if (cls.tag == StratumTag::StrictlySemistable || cls.tag == StratumTag::Stable)
                    CHECK(configuration_chi_oracle(p.num_values) == configuration_chi(p.num_values));
            }
        }
    }
}
