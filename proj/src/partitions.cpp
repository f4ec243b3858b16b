#include "lp2dt/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lp2dt {

Partition2D::Partition2D(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
}

int Partition2D::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

CellSet Partition2D::cells() const {
    CellSet out;
    for (int y = 0; y < static_cast<int>(parts.size()); ++y)
        for (int x = 0; x < parts[static_cast<size_t>(y)]; ++x) out.push_back({x, y});
    cellset_normalize(out);
    return out;
}

CellSet Partition2D::cells_at(Cell corner) const {
    CellSet out = cells();
    for (auto& c : out) {
        c.x += corner.x;
        c.y += corner.y;
    }
    cellset_normalize(out);
    return out;
}

Partition2D Partition2D::transposed() const {
    if (parts.empty()) return {};
    std::vector<int> t(static_cast<size_t>(parts[0]), 0);
    for (int len : parts)
        for (int x = 0; x < len; ++x) ++t[static_cast<size_t>(x)];
    return Partition2D(std::move(t));
}

std::string Partition2D::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "]";
    return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition2D>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

const std::vector<Partition2D>& enumerate_partitions(int n) {
    if (n < 0) throw Error("enumerate_partitions: negative size");
    static std::mutex lock;
    static std::map<int, std::vector<Partition2D>> memo;
    std::scoped_lock guard(lock);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<Partition2D> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return memo.emplace(n, std::move(out)).first->second;
}

long long partition_tuple_count(int k, int n) {
    if (k == 0) return n == 0 ? 1 : 0;
    long long total = 0;
    for (int first = 0; first <= n; ++first)
        total += static_cast<long long>(enumerate_partitions(first).size()) *
                 partition_tuple_count(k - 1, n - first);
    return total;
}

void cellset_normalize(CellSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool cellset_contains(const CellSet& s, Cell c) {
    return std::binary_search(s.begin(), s.end(), c);
}

CellSet cellset_union(const CellSet& a, const CellSet& b) {
    CellSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellSet cellset_intersection(const CellSet& a, const CellSet& b) {
    CellSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellSet cellset_difference(const CellSet& a, const CellSet& b) {
    CellSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<CellSet> connected_components(const CellSet& s) {
    std::vector<CellSet> comps;
    std::vector<bool> seen(s.size(), false);
    for (size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        CellSet comp;
        std::vector<size_t> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            size_t j = stack.back();
            stack.pop_back();
            comp.push_back(s[j]);
            const Cell c = s[j];
            const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
            for (Cell nb : nbrs) {
                auto it = std::lower_bound(s.begin(), s.end(), nb);
                if (it != s.end() && *it == nb) {
                    size_t idx = static_cast<size_t>(it - s.begin());
                    if (!seen[idx]) {
                        seen[idx] = true;
                        stack.push_back(idx);
                    }
                }
            }
        }
        cellset_normalize(comp);
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const CellSet& a, const CellSet& b) { return a.front() < b.front(); });
    return comps;
}

bool adjacent(const CellSet& a, const CellSet& b) {
    for (Cell c : a) {
        const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell nb : nbrs)
            if (cellset_contains(b, nb)) return true;
    }
    return false;
}

}  // namespace lp2dt
