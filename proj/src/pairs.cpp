#include "lp2dt/pairs.hpp"

#include <algorithm>

namespace lp2dt {

std::vector<SectionTriple> compatible_triples(const SigmaModel& model, int n) {
    // (P2) forces u, v >= 0 and w >= A; everything outside is zero in
    // some chart.
    std::vector<SectionTriple> out;
    int A = model.data.A;
    for (int u = 0; u <= n - A; ++u)
        for (int v = 0; u + v <= n - A; ++v) {
            int w = n - u - v;
            Content c1 = model.content(0, {u, v});
            if (c1.kind == ContentKind::Zero) continue;
            Content c2 = model.content(1, {v, w});
            if (c2.kind == ContentKind::Zero) continue;
            Content c3 = model.content(2, {w, u});
            if (c3.kind == ContentKind::Zero) continue;
            SectionTriple t;
            t.u = u;
            t.v = v;
            t.w = w;
            for (const Content& c : {c1, c2, c3})
                if (c.kind == ContentKind::Line) t.lines.push_back(c.block);
            std::sort(t.lines.begin(), t.lines.end());
            t.lines.erase(std::unique(t.lines.begin(), t.lines.end()), t.lines.end());
            out.push_back(std::move(t));
        }
    return out;
}

namespace {

// chi of the space of allowed section directions t for one triple under
// one pattern: t must match every forced line and avoid the values whose
// subsheaf sits at P/2.
Rational section_space_chi(const SectionTriple& t, const Pattern& pattern,
                           const std::vector<int>& destabilizers) {
    if (t.lines.empty()) return Rational(2 - static_cast<long long>(destabilizers.size()));
    int forced = pattern.value_of_block(t.lines.front());
    for (int block : t.lines)
        if (pattern.value_of_block(block) != forced) return 0;
    bool banned = std::find(destabilizers.begin(), destabilizers.end(), forced) != destabilizers.end();
    return banned ? 0 : 1;
}

}  // namespace

PairCount chart_pair_count(const SigmaModel& model, const Pattern& pattern, int n) {
    StratumClass cls = classify_pattern(model, pattern);
    PairCount pc;
    pc.n = n;
    for (const SectionTriple& t : compatible_triples(model, n)) {
        if (t.l() == 1) ++pc.bullets;
        else ++pc.circles;
        pc.weighted += section_space_chi(t, pattern, cls.destabilizers);
    }
    return pc;
}

Rational stratified_pair_count(const SigmaModel& model, int n) {
    auto triples = compatible_triples(model, n);
    Rational total = 0;
    for (const Pattern& pattern :
         enumerate_patterns(model.num_p_blocks, model.free_component_count())) {
        StratumClass cls = classify_pattern(model, pattern);
        if (cls.tag != StratumTag::StrictlySemistable && cls.tag != StratumTag::Stable) continue;
        Rational per_config = 0;
        for (const SectionTriple& t : triples)
            per_config += section_space_chi(t, pattern, cls.destabilizers);
        total += Rational(configuration_chi(pattern.num_values)) * per_config;
    }
    return total;
}

Rational decomposable_pair_contribution(int b, int n) {
    if (b % 2 != 0) throw Error("split families need even b");
    long long h = partition_tuple_count(3, -b / 2);
    Rational P = family_hilbert_polynomial(b).eval(n);
    return Rational(h) * P * (P - 2) / 8 + Rational(h * (h - 1) / 2) * P * P / 4;
}

Rational pair_invariant(int b, int n, const std::vector<TableRow>& rows) {
    Rational P = family_hilbert_polynomial(b).eval(n);
    if (!is_integer(P) || numerator(P) % 2 != 0) throw Error("P(n) must be even");
    Rational total = decomposable_pair_contribution(b, n);
    for (const TableRow& row : rows)
        total += Rational(row.multiplicity) * P * (Rational(row.c_ss, 2) + row.c_st);
    return total;
}

}  // namespace lp2dt
