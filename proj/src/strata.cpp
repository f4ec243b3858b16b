#include "lp2dt/strata.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lp2dt {

std::vector<Pattern> enumerate_patterns(int num_p_blocks, int num_free) {
    std::vector<Pattern> out;
    Pattern cur;
    cur.num_p_blocks = num_p_blocks;
    cur.svalue.assign(static_cast<size_t>(num_free), -1);

    // restricted growth over the free components: join a p-class, an
    // already opened shared value, or open a new one
    auto rec = [&](auto&& self, int i, int opened) -> void {
        if (i == num_free) {
            cur.num_values = num_p_blocks + opened;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= num_p_blocks + opened; ++v) {
            cur.svalue[static_cast<size_t>(i)] = v;
            self(self, i + 1, std::max(opened, v - num_p_blocks + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

StratumClass classify_pattern(const SigmaModel& model, const Pattern& pattern) {
    HilbertPolynomial half = model.hilbert * Rational(1, 2);
    StratumClass result;
    std::vector<HilbertPolynomial> polys;
    for (int v = 0; v < pattern.num_values; ++v) {
        HilbertPolynomial L = destabilizer_polynomial(model, pattern, v);
        int c = compare_polys(L, half);
        if (c > 0) {
            result.tag = StratumTag::Unstable;
            result.destabilizers = {v};
            return result;
        }
        if (c == 0) result.destabilizers.push_back(v);
        polys.push_back(L);
    }
    // A direction distinct from every p_i and s_i never destabilizes for
    // the families in range; guarded rather than assumed.
    HilbertPolynomial generic = destabilizer_polynomial(model, pattern, -1);
    if (compare_polys(generic, half) >= 0)
        throw Error("generic direction reaches P/2 for " + model.data.str());

    if (pattern.num_values <= 2) {
        if (pattern.num_values == 2) {
            // a two-direction semistable family splits; sanity-check the
            // subsheaf polynomials against the total
            HilbertPolynomial sum = polys[0] + polys[1];
            if (!(sum == model.hilbert))
                throw Error("two-direction family does not split: " + model.data.str());
        }
        result.tag = StratumTag::Decomposable;
        return result;
    }
    result.tag = result.destabilizers.empty() ? StratumTag::Stable : StratumTag::StrictlySemistable;
    return result;
}

long long configuration_chi(int d) {
    if (d < 3) throw Error("configuration_chi requires at least 3 points");
    long long chi = 1;
    for (int i = 0; i <= d - 4; ++i) chi *= -1 - i;
    return chi;
}

Rational fq_configuration_count(int d, int q) {
    if (q < d + 2) throw Error("fq oracle needs q >= d + 2");
    // points of P^1(F_q): q + 1 of them; enumerate ordered distinct
    // d-tuples
    int npts = q + 1;
    std::vector<bool> used(static_cast<size_t>(npts), false);
    long long count = 0;
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == d) {
            ++count;
            return;
        }
        for (int p = 0; p < npts; ++p) {
            if (used[static_cast<size_t>(p)]) continue;
            used[static_cast<size_t>(p)] = true;
            self(self, slot + 1);
            used[static_cast<size_t>(p)] = false;
        }
    };
    rec(rec, 0);
    long long pgl = 1LL * q * q * q - q;
    return Rational(count, pgl);
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace

long long configuration_chi_oracle(int d) {
    static std::mutex lock;
    static std::map<int, long long> memo;
    std::scoped_lock guard(lock);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;

    // counting polynomial has degree d - 3; interpolate from d - 2 primes
    int needed = d - 2;
    if (needed < 1) throw Error("oracle requires d >= 3");
    std::vector<int> qs;
    for (int q = d + 2; static_cast<int>(qs.size()) < needed; ++q)
        if (is_prime(q)) qs.push_back(q);

    std::vector<Rational> vals;
    for (int q : qs) vals.push_back(fq_configuration_count(d, q));

    // Lagrange interpolation evaluated at q = 1
    Rational at_one = 0;
    for (size_t i = 0; i < qs.size(); ++i) {
        Rational term = vals[i];
        for (size_t j = 0; j < qs.size(); ++j) {
            if (j == i) continue;
            term *= rat(1 - qs[j], qs[i] - qs[j]);
        }
        at_one += term;
    }
    if (!is_integer(at_one)) throw Error("oracle interpolation not integral");
    long long result = to_long(at_one);
    memo[d] = result;
    return result;
}

CValues c_values(const SigmaModel& model) {
    CValues out;
    for (const Pattern& pattern : enumerate_patterns(model.num_p_blocks, model.free_component_count())) {
        StratumClass cls = classify_pattern(model, pattern);
        if (cls.tag == StratumTag::StrictlySemistable)
            out.c_ss += configuration_chi(pattern.num_values) *
                        (2 - static_cast<long long>(cls.destabilizers.size()));
        else if (cls.tag == StratumTag::Stable)
            out.c_st += configuration_chi(pattern.num_values);
    }
    return out;
}

}  // namespace lp2dt
