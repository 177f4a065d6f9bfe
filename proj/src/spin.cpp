#include "orbitcalc/spin.hpp"

#include <algorithm>

namespace orbitcalc {

namespace {

void require_rather_odd(const Partition& lambda) {
    if (!is_rather_odd(lambda)) throw DomainError(lambda.str() + " is not rather odd");
}

int mod4(int n) { return ((n % 4) + 4) % 4; }
int div4(int n) { return (n - mod4(n)) / 4; }

Partition append(const Partition& p, int x) {
    if (x < 0) throw DomainError("negative part in rho recursion");
    std::vector<int> v = p.parts();
    v.push_back(x);
    return Partition(std::move(v));
}

// Drops the largest part, or the largest pair when it is even.
std::vector<int> peel(const std::vector<int>& asc) {
    const std::size_t drop = asc.back() % 2 ? 1 : 2;
    return {asc.begin(), asc.end() - static_cast<std::ptrdiff_t>(drop)};
}

int d_seq(const std::vector<int>& asc) {
    int d = 0;
    for (int x : asc) d += d_int(x);
    return d;
}

Bipartition rho_rec(const std::vector<int>& asc) {
    if (asc.empty()) return {};
    const int lm = asc.back();
    const auto mu = peel(asc);
    const int dm = d_seq(mu);
    const auto [g, de] = rho_rec(mu);
    switch (d_int(lm)) {
        case 0: {
            const int r = div4(lm + 2) - dm, s = div4(lm) + dm;
            if (dm > 0) return {append(g, r), append(de, s)};
            return {append(g, s), append(de, r)};
        }
        case 1: {
            const int r = (lm - 1) / 4 - dm;
            if (dm > 0) return {append(g, r), de};
            if (dm == 0) return {append(de, r), g};
            return {g, append(de, r)};
        }
        default: {
            const int r = (lm - 3) / 4 + dm;
            if (dm > 1) return {g, append(de, r)};
            if (dm == 1) return {append(de, r), g};
            return {append(g, r), de};
        }
    }
}

Bipartition rho_tilde_rec(const std::vector<int>& asc) {
    if (asc.empty()) return {};
    const int lm = asc.back();
    const auto mu = peel(asc);
    const int d = d_seq(mu), q = div4(lm);
    const auto [g, de] = rho_tilde_rec(mu);
    switch (mod4(lm)) {
        case 0: return {append(g, q - d), append(de, q + d)};
        case 1: return {append(g, q - d), de};
        case 2: return {append(g, q - d + 1), append(de, q + d)};
        default: return {g, append(de, q + d)};
    }
}

struct Block {
    int value;
    int mult;
};

std::vector<Block> blocks(const Partition& lambda) {
    std::vector<Block> out;
    for (int x : lambda.ascending()) {
        if (!out.empty() && out.back().value == x)
            ++out.back().mult;
        else
            out.push_back({x, 1});
    }
    return out;
}

}  // namespace

int d_int(int m) {
    if (m % 2 == 0) return 0;
    return mod4(m) == 1 ? 1 : -1;
}

int d_partition(const Partition& lambda) { return d_seq(lambda.parts()); }

std::vector<Partition> rather_odd_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (is_rather_odd(p)) out.push_back(p);
    return out;
}

Bipartition rho_recursive(const Partition& lambda) {
    require_rather_odd(lambda);
    return rho_rec(lambda.ascending());
}

Bipartition rho_tilde(const Partition& lambda) {
    require_rather_odd(lambda);
    return rho_tilde_rec(lambda.ascending());
}

Bipartition rho_from_tilde(const Partition& lambda) {
    Bipartition t = rho_tilde(lambda);
    return d_partition(lambda) > 0 ? t : t.flip();
}

Bipartition rho_closed(const Partition& lambda) {
    require_rather_odd(lambda);
    const auto asc = lambda.ascending();
    std::vector<int> D(asc.size());
    for (std::size_t i = 1; i < asc.size(); ++i) D[i] = D[i - 1] + d_int(asc[i - 1]);
    // one entry per odd part, one per pair of equal even parts
    std::vector<int> plus, minus;
    for (std::size_t i = 0; i < asc.size(); ++i) {
        const int q = div4(asc[i]);
        switch (mod4(asc[i])) {
            case 0:
                minus.push_back(q - D[i]);
                plus.push_back(q + D[i]);
                ++i;
                break;
            case 1: minus.push_back(q - D[i]); break;
            case 2:
                minus.push_back(q + 1 - D[i]);
                plus.push_back(q + D[i]);
                ++i;
                break;
            default: plus.push_back(q + D[i]); break;
        }
    }
    for (int x : minus)
        if (x < 0) throw DomainError("negative entry in closed rho formula");
    for (int x : plus)
        if (x < 0) throw DomainError("negative entry in closed rho formula");
    Bipartition b{Partition(minus), Partition(plus)};
    return d_partition(lambda) > 0 ? b : b.flip();
}

SpinSequences spin_sequences(const Partition& lambda) {
    require_rather_odd(lambda);
    SpinSequences s;
    for (auto [v, a] : blocks(lambda)) {
        const int r = mod4(v);
        for (int j = 0; j < a; ++j) {
            s.q.push_back(div4(v));
            s.r.push_back(r);
            const int alt = j % 2;
            s.eps.push_back(r == 0 ? alt : r == 1 ? 0 : r == 2 ? 1 - alt : 1);
            s.delta.push_back(r == 0 ? alt : 0);
            s.gamma.push_back(r % 2 == 0 ? alt : 0);
        }
    }
    return s;
}

LinearPresentation spin_presentation(const Partition& lambda) {
    auto s = spin_sequences(lambda);
    LinearPresentation lp{s.q, s.eps};
    for (std::size_t i = 0; i < lp.Z.size(); ++i) lp.Z[i] += static_cast<int>(i) - s.delta[i];
    return lp;
}

Symbol spin_symbol(const Partition& lambda) {
    return canonicalize(from_linear_presentation(spin_presentation(lambda), 2, 0));
}

std::vector<int> trivial_ssymbol_sequence(const Partition& lambda) {
    auto s = spin_sequences(lambda);
    std::vector<int> out(s.q.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = 2 * s.q[i] + static_cast<int>(i) + s.eps[i] - 2 * s.delta[i];
    return out;
}

Partition dbv_rather_odd(const Partition& lambda) {
    require_rather_odd(lambda);
    const auto bl = blocks(lambda);
    const int k = static_cast<int>(bl.size());
    std::vector<int> odd;  // 0-based block positions of odd parts
    for (int i = 0; i < k; ++i)
        if (bl[i].value % 2) odd.push_back(i);
    std::vector<int> delta(k, 0);
    for (std::size_t i = 0; i < odd.size(); ++i) {
        const int sign = i % 2 == 0 ? -1 : 1;  // position i+1 is odd when i is even
        delta[odd[i]] += sign;
        if (odd[i] + 1 < k) delta[odd[i] + 1] -= sign;
    }
    std::vector<int> parts;
    int tail = 0;
    std::vector<int> A(k);
    for (int i = k - 1; i >= 0; --i) A[i] = tail += bl[i].mult;
    for (int i = 0; i < k; ++i) {
        const int m = bl[i].value - (i ? bl[i - 1].value : 0) + delta[i];
        if (m < 0) throw DomainError("negative multiplicity in rather odd duality");
        parts.insert(parts.end(), m, A[i]);
    }
    return Partition(std::move(parts));
}

Partition half_dbv(const Partition& lambda) {
    Partition d = dbv_rather_odd(lambda);
    std::vector<int> half;
    const auto& p = d.parts();
    for (std::size_t i = 0; i < p.size(); i += 2) {
        if (i + 1 >= p.size() || p[i + 1] != p[i]) throw DomainError("dual of " + lambda.str() + " is not doubled");
        half.push_back(p[i]);
    }
    return Partition(std::move(half));
}

}  // namespace orbitcalc
