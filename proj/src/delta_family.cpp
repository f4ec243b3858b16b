#include "lp2dt/delta_family.hpp"

#include <algorithm>
#include <sstream>

namespace lp2dt {

std::array<int, 3> DeltaFamilyData::pclass() const {
    std::array<int, 3> cls{0, 1, 2};
    for (auto [i, j] : coincidences) {
        int a = std::min(cls[static_cast<size_t>(i)], cls[static_cast<size_t>(j)]);
        int b = std::max(cls[static_cast<size_t>(i)], cls[static_cast<size_t>(j)]);
        for (auto& c : cls)
            if (c == b) c = a;
    }
    for (int s = 0; s < 3; ++s)
        if (deltas[static_cast<size_t>(s)] == 0) cls[static_cast<size_t>(s)] = -1;
    return cls;
}

void DeltaFamilyData::validate() const {
    for (int d : deltas)
        if (d < 0) throw Error("negative Delta");
    if (deltas[0] + deltas[1] + deltas[2] != -2 * A)
        throw Error("Delta sum must equal -2A");
    for (auto [i, j] : coincidences) {
        if (!(0 <= i && i < j && j < 3)) throw Error("bad coincidence pair");
        if (deltas[static_cast<size_t>(i)] == 0 || deltas[static_cast<size_t>(j)] == 0)
            throw Error("coincidence on a zero direction");
    }
    // transitive closure check
    auto cls = pclass();
    std::vector<std::pair<int, int>> expect;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (cls[static_cast<size_t>(i)] >= 0 && cls[static_cast<size_t>(i)] == cls[static_cast<size_t>(j)])
                expect.emplace_back(i, j);
    auto sorted = coincidences;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expect) throw Error("coincidence set not transitively closed / not sorted");
}

std::string DeltaFamilyData::str() const {
    std::ostringstream os;
    os << "A=" << A << " Delta=(" << deltas[0] << "," << deltas[1] << "," << deltas[2] << ") pis=(";
    for (int i = 0; i < 6; ++i) os << (i ? "," : "") << pis[static_cast<size_t>(i)].str();
    os << ") E={";
    for (size_t i = 0; i < coincidences.size(); ++i)
        os << (i ? "," : "") << "(" << coincidences[i].first + 1 << "," << coincidences[i].second + 1 << ")";
    os << "}";
    return os.str();
}

DeltaFamilyData reindex(const DeltaFamilyData& data, const std::array<int, 3>& perm) {
    auto idx = [&](int i) { return static_cast<size_t>(perm[static_cast<size_t>(i % 3)]); };
    bool even = (perm[1] == (perm[0] + 1) % 3);

    DeltaFamilyData out;
    out.A = data.A;
    for (int i = 0; i < 3; ++i) out.deltas[static_cast<size_t>(i)] = data.deltas[idx(i)];
    for (int j = 0; j < 3; ++j) {
        if (even) {
            // new chart j is old chart perm[j]
            out.pis[static_cast<size_t>(2 * j)] = data.pis[2 * idx(j)];
            out.pis[static_cast<size_t>(2 * j + 1)] = data.pis[2 * idx(j) + 1];
        } else {
            // new chart j is old chart perm[j+1], transposed
            out.pis[static_cast<size_t>(2 * j)] = data.pis[2 * idx(j + 1) + 1].transposed();
            out.pis[static_cast<size_t>(2 * j + 1)] = data.pis[2 * idx(j + 1)].transposed();
        }
    }
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[idx(i)] = i;
    for (auto [i, j] : data.coincidences) {
        int a = inv[static_cast<size_t>(i)], b = inv[static_cast<size_t>(j)];
        out.coincidences.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.coincidences.begin(), out.coincidences.end());
    return out;
}

int reindex_multiplicity(const std::array<int, 3>& deltas) {
    if (deltas[0] == deltas[1] && deltas[1] == deltas[2]) return 1;
    if (deltas[0] == deltas[1] || deltas[1] == deltas[2] || deltas[0] == deltas[2]) return 3;
    return 6;
}

ChernCharacter rank1_chern(int u, int v, int w, const std::array<Partition2D, 3>& pis) {
    long long s = u + v + w;
    long long boxes = pis[0].size() + pis[1].size() + pis[2].size();
    return {1, -s, Rational(s * s, 2) - boxes};
}

ChernCharacter rank2_chern(const DeltaFamilyData& data) {
    long long sum = data.deltas[0] + data.deltas[1] + data.deltas[2];
    long long boxes = 0;
    for (const auto& p : data.pis) boxes += p.size();
    auto cls = data.pclass();
    Rational c2 = Rational(1LL * data.A * data.A, 2) + Rational((data.A + sum) * (data.A + sum), 2) - boxes;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            bool same = cls[static_cast<size_t>(i)] >= 0 && cls[static_cast<size_t>(i)] == cls[static_cast<size_t>(j)];
            if (!same) c2 -= 1LL * data.deltas[static_cast<size_t>(i)] * data.deltas[static_cast<size_t>(j)];
        }
    return {2, -2 * data.A - sum, c2};
}

HilbertPolynomial hilbert_from_chern(const ChernCharacter& ch) {
    return {Rational(ch.rank, 2), Rational(ch.c1) + Rational(3 * ch.rank, 2),
            Rational(ch.rank) + Rational(3 * ch.c1, 2) + ch.c2};
}

}  // namespace lp2dt
