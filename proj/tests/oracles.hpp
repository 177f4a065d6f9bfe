// Independent brute-force reference implementations used by the tests.
// Nothing here calls into the library's algorithms beyond the Partition value type.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "orbitcalc/partition.hpp"

namespace oracle {

using orbitcalc::ClassicalType;
using orbitcalc::Partition;

inline std::vector<std::vector<int>> all_partitions(int n, int cap = -1) {
    if (cap < 0) cap = n;
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int x = std::min(n, cap); x >= 1; --x)
        for (auto& rest : all_partitions(n - x, x)) {
            std::vector<int> p{x};
            p.insert(p.end(), rest.begin(), rest.end());
            out.push_back(p);
        }
    return out;
}

inline bool prefix_leq(const std::vector<int>& a, const std::vector<int>& b) {
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

// Rule check written directly from the multiplicity conditions.
inline bool typed(const std::vector<int>& p, char t) {
    int n = 0;
    std::map<int, int> m;
    for (int x : p) {
        n += x;
        ++m[x];
    }
    if ((t == 'B') != (n % 2 == 1)) return false;
    for (auto [x, k] : m) {
        bool even_part = x % 2 == 0;
        bool restricted = (t == 'C') ? !even_part : even_part;
        if (restricted && k % 2) return false;
    }
    return true;
}

inline std::optional<std::vector<int>> max_typed_below(const std::vector<int>& lam, char t) {
    int n = 0;
    for (int x : lam) n += x;
    std::vector<std::vector<int>> cands;
    for (auto& p : all_partitions(n))
        if (typed(p, t) && prefix_leq(p, lam)) cands.push_back(p);
    for (auto& c : cands) {
        bool top = true;
        for (auto& o : cands)
            if (!prefix_leq(o, c)) {
                top = false;
                break;
            }
        if (top) return c;
    }
    return std::nullopt;
}

inline std::vector<int> transpose(const std::vector<int>& p) {
    std::vector<int> t;
    for (int col = 1; !p.empty() && col <= p.front(); ++col) {
        int h = 0;
        for (int x : p) h += x >= col;
        t.push_back(h);
    }
    return t;
}

// Characters of the hyperoctahedral group W_n by the Murnaghan-Nakayama rule.
// A class is a pair (positive cycle lengths, negative cycle lengths).
struct HookRemoval {
    std::vector<int> rest;
    int sign;
};

inline std::vector<HookRemoval> remove_rim_hooks(const std::vector<int>& p, int k) {
    const int L = static_cast<int>(p.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = p[i] + (L - 1 - i);
    std::vector<HookRemoval> out;
    for (int i = 0; i < L; ++i) {
        const int y = beta[i] - k;
        if (y < 0 || std::find(beta.begin(), beta.end(), y) != beta.end()) continue;
        int between = 0;
        for (int b : beta) between += b > y && b < beta[i];
        std::vector<int> nb = beta;
        nb[i] = y;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> rest;
        for (int j = 0; j < L; ++j)
            if (nb[j] - (L - 1 - j) > 0) rest.push_back(nb[j] - (L - 1 - j));
        out.push_back({rest, between % 2 ? -1 : 1});
    }
    return out;
}

using SignedCycles = std::vector<std::pair<int, bool>>;  // (length, negative)

inline long long hyperoctahedral_character(const std::vector<int>& a, const std::vector<int>& b,
                                           const SignedCycles& cycles, std::size_t from = 0) {
    if (from == cycles.size()) return a.empty() && b.empty() ? 1 : 0;
    const auto [k, negative] = cycles[from];
    long long total = 0;
    for (auto& h : remove_rim_hooks(a, k)) total += h.sign * hyperoctahedral_character(h.rest, b, cycles, from + 1);
    for (auto& h : remove_rim_hooks(b, k))
        total += (negative ? -h.sign : h.sign) * hyperoctahedral_character(a, h.rest, cycles, from + 1);
    return total;
}

struct SignedClass {
    std::vector<int> pos;
    std::vector<int> neg;
};

inline std::vector<SignedClass> signed_classes(int n) {
    std::vector<SignedClass> out;
    for (int i = 0; i <= n; ++i)
        for (auto& p : all_partitions(i))
            for (auto& q : all_partitions(n - i)) out.push_back({p, q});
    return out;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long long signed_centralizer(const SignedClass& c) {
    long long z = 1;
    for (const auto* part : {&c.pos, &c.neg}) {
        std::map<int, int> m;
        for (int x : *part) ++m[x];
        for (auto [x, k] : m) {
            for (int j = 0; j < k; ++j) z *= 2 * x;
            z *= factorial(k);
        }
    }
    return z;
}

inline SignedCycles cycles_of(const SignedClass& c) {
    SignedCycles out;
    for (int x : c.pos) out.push_back({x, false});
    for (int x : c.neg) out.push_back({x, true});
    return out;
}

// <Res F, F1 x F2> over W_i x W_j, with bipartitions given as pairs of partitions.
using Bip = std::pair<std::vector<int>, std::vector<int>>;

inline long long hyperoctahedral_restriction(const Bip& F, const Bip& F1, const Bip& F2, int i, int j) {
    const long long order_i = factorial(i) << i, order_j = factorial(j) << j;
    long long total = 0;
    for (auto& c1 : signed_classes(i))
        for (auto& c2 : signed_classes(j)) {
            auto cyc = cycles_of(c1);
            for (auto& c : cycles_of(c2)) cyc.push_back(c);
            const long long chi = hyperoctahedral_character(F.first, F.second, cyc);
            if (chi == 0) continue;
            total += chi * hyperoctahedral_character(F1.first, F1.second, cycles_of(c1)) *
                     hyperoctahedral_character(F2.first, F2.second, cycles_of(c2)) * (order_i / signed_centralizer(c1)) *
                     (order_j / signed_centralizer(c2));
        }
    return total / (order_i * order_j);
}

}  // namespace oracle
