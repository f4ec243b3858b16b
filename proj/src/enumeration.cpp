#include "lp2dt/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lp2dt {

HilbertPolynomial family_hilbert_polynomial(int b) {
    return {Rational(1), Rational(3), Rational(2 + b)};
}

namespace {

// Candidate coincidence sets on the positive slots, transitively closed.
std::vector<std::vector<std::pair<int, int>>> coincidence_options(const std::array<int, 3>& deltas) {
    std::vector<std::vector<std::pair<int, int>>> out;
    out.push_back({});
    std::vector<int> pos;
    for (int s = 0; s < 3; ++s)
        if (deltas[static_cast<size_t>(s)] > 0) pos.push_back(s);
    for (size_t a = 0; a < pos.size(); ++a)
        for (size_t b = a + 1; b < pos.size(); ++b) out.push_back({{pos[a], pos[b]}});
    if (pos.size() == 3) out.push_back({{0, 1}, {0, 2}, {1, 2}});
    return out;
}

// Slope precondition: a merged direction with Sum_{i in B} Delta_i
// exceeding the complement destabilizes every pattern.
bool mu_feasible(const std::array<int, 3>& deltas, const std::array<int, 3>& cls) {
    int total = deltas[0] + deltas[1] + deltas[2];
    for (int rep = 0; rep < 3; ++rep) {
        if (cls[static_cast<size_t>(rep)] != rep) continue;
        int in = 0;
        for (int s = 0; s < 3; ++s)
            if (cls[static_cast<size_t>(s)] == rep) in += deltas[static_cast<size_t>(s)];
        if (in > 0 && 2 * in > total) return false;
    }
    return true;
}

// Every assignment of total size `total` to the six partition slots.
void for_each_pi_tuple(int total, const std::function<void(const std::array<Partition2D, 6>&)>& fn) {
    std::array<Partition2D, 6> pis;
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == 5) {
            for (const Partition2D& p : enumerate_partitions(remaining)) {
                pis[5] = p;
                fn(pis);
            }
            return;
        }
        for (int take = 0; take <= remaining; ++take)
            for (const Partition2D& p : enumerate_partitions(take)) {
                pis[static_cast<size_t>(slot)] = p;
                self(self, slot + 1, remaining - take);
            }
    };
    rec(rec, 0, total);
}

bool row_order(const TableRow& a, const TableRow& b) {
    if (a.data.A != b.data.A) return a.data.A > b.data.A;  // |A| ascending
    if (a.data.deltas != b.data.deltas) return a.data.deltas > b.data.deltas;
    if (a.data.pis != b.data.pis) return a.data.pis < b.data.pis;
    return a.data.coincidences < b.data.coincidences;
}

}  // namespace

std::vector<TableRow> enumerate_delta_families(int b, const EnumerateOptions& opts) {
    if (b > 0) throw Error("enumeration requires b <= 0");
    int a_floor = opts.a_floor_override != 0 ? opts.a_floor_override : -(std::abs(b) + 4);
    if (a_floor >= 0) throw Error("A floor must be negative");

    std::map<std::string, TableRow> families;
    int consecutive_empty = 0;
    bool stopped = false;

    for (int A = -1; A >= a_floor; --A) {
        size_t before = families.size();
        int total = -2 * A;
        for (int d1 = total; d1 >= (total + 2) / 3; --d1)
            for (int d2 = std::min(d1, total - d1); d2 >= 0; --d2) {
                int d3 = total - d1 - d2;
                if (d3 < 0 || d3 > d2) continue;
                std::array<int, 3> deltas{d1, d2, d3};
                for (const auto& E : coincidence_options(deltas)) {
                    DeltaFamilyData base;
                    base.A = A;
                    base.deltas = deltas;
                    base.coincidences = E;
                    auto cls = base.pclass();
                    if (!mu_feasible(deltas, cls)) continue;

                    long long products = 0;
                    for (int i = 0; i < 3; ++i)
                        for (int j = i + 1; j < 3; ++j) {
                            bool same = cls[static_cast<size_t>(i)] >= 0 &&
                                        cls[static_cast<size_t>(i)] == cls[static_cast<size_t>(j)];
                            if (!same) products += 1LL * deltas[static_cast<size_t>(i)] * deltas[static_cast<size_t>(j)];
                        }
                    // For slope-feasible data the box budget never
                    // exceeds -b (maximizing Sum Delta_i^2 subject to
                    // Delta_i <= -A gives boxes = -b exactly).
                    long long boxes = 1LL * A * A - b - products;
                    if (boxes < 0) continue;
                    if (boxes > -static_cast<long long>(b))
                        throw Error("box budget exceeds -b; slope prefilter broken");

                    for_each_pi_tuple(static_cast<int>(boxes), [&](const std::array<Partition2D, 6>& pis) {
                        DeltaFamilyData data = base;
                        data.pis = pis;
                        auto model = build_sigma_model(data);

                        bool relevant = false;
                        CValues cv;
                        for (const Pattern& pattern :
                             enumerate_patterns(model.num_p_blocks, model.free_component_count())) {
                            StratumClass sc = classify_pattern(model, pattern);
                            if (sc.tag == StratumTag::StrictlySemistable) {
                                relevant = true;
                                cv.c_ss += configuration_chi(pattern.num_values) *
                                           (2 - static_cast<long long>(sc.destabilizers.size()));
                            } else if (sc.tag == StratumTag::Stable) {
                                relevant = true;
                                cv.c_st += configuration_chi(pattern.num_values);
                            }
                        }
                        if (!relevant) return;

                        TableRow row;
                        row.data = data;
                        row.c_ss = cv.c_ss;
                        row.c_st = cv.c_st;
                        row.multiplicity = reindex_multiplicity(deltas);
                        row.free_components = model.free_component_count();
                        std::string fp = model.fingerprint();
                        auto it = families.find(fp);
                        if (it == families.end()) families.emplace(std::move(fp), std::move(row));
                        else {
                            // same sigma-family reached through another
                            // partition split; keep the smaller datum
                            if (row.c_ss != it->second.c_ss || row.c_st != it->second.c_st)
                                throw Error("family representatives disagree");
                            if (row_order(row, it->second)) it->second = row;
                        }
                    });
                }
            }
        if (families.size() == before) {
            if (++consecutive_empty >= 2) {
                stopped = true;
                break;
            }
        } else {
            consecutive_empty = 0;
        }
    }
    if (!stopped)
        throw Error("A sweep still produced rows near the floor; raise the A floor");

    std::vector<TableRow> rows;
    rows.reserve(families.size());
    for (auto& [fp, row] : families) rows.push_back(std::move(row));
    std::sort(rows.begin(), rows.end(), row_order);
    return rows;
}

}  // namespace lp2dt
