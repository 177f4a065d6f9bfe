#include "orbitcalc/symbol.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitcalc {

namespace {

int floor_div(int x, int y) {
    int q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

int choose2(int n) { return n * (n - 1) / 2; }

std::string seq_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

bool row_ok(const std::vector<int>& row, int gap, int first_min) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0) return false;
        if (i == 0 && row[i] < first_min) return false;
        if (i > 0 && row[i] < row[i - 1] + gap) return false;
    }
    return true;
}

std::vector<int> padded_ascending(const Partition& p, int length) {
    std::vector<int> v(length - p.length(), 0);
    auto asc = p.ascending();
    v.insert(v.end(), asc.begin(), asc.end());
    return v;
}

}  // namespace

std::string Bipartition::str() const { return first.str() + "x" + second.str(); }

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k)
        for (auto& a : partitions_of(k))
            for (auto& b : partitions_of(n - k)) out.push_back({a, b});
    return out;
}

Bipartition unordered(const Bipartition& b) {
    const int s1 = b.first.size(), s2 = b.second.size();
    if (s1 > s2 || (s1 == s2 && b.first >= b.second)) return b;
    return b.flip();
}

Partition partition_from_beta(const std::vector<int>& x) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || (i > 0 && x[i] <= x[i - 1])) throw DomainError("not a beta-set: " + seq_str(x));
        parts.push_back(x[i] - static_cast<int>(i));
    }
    return Partition(std::move(parts));
}

std::vector<int> beta_from_partition(const Partition& lambda, int length) {
    if (length < lambda.length())
        throw DomainError("beta-set length " + std::to_string(length) + " is shorter than " + lambda.str());
    auto v = padded_ascending(lambda, length);
    for (int i = 0; i < length; ++i) v[i] += i;
    return v;
}

std::vector<int> staircase(int n) {
    std::vector<int> z(std::max(n, 0));
    std::iota(z.begin(), z.end(), 0);
    return z;
}

int Symbol::entry_sum() const {
    return std::accumulate(top.begin(), top.end(), 0) + std::accumulate(bottom.begin(), bottom.end(), 0);
}

int Symbol::rank() const {
    const int L = content();
    return entry_sum() - (a + b) * ((L - 1) * (L - 1) / 4) - b * (L / 2);
}

int Symbol::relative_rank() const {
    return entry_sum() - (a + b) * (choose2(static_cast<int>(top.size())) + choose2(static_cast<int>(bottom.size()))) -
           b * static_cast<int>(bottom.size());
}

std::string Symbol::str() const {
    return "[" + seq_str(top) + "/" + seq_str(bottom) + "]^(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

int delta_ab(int a, int b, int d) { return (a + b) * floor_div(d * d, 4) - b * floor_div(d, 2); }

bool is_valid(const Symbol& s) {
    return s.a >= 0 && s.b >= 0 && row_ok(s.top, s.a + s.b, 0) && row_ok(s.bottom, s.a + s.b, s.b);
}

Symbol make_symbol(int a, int b, std::vector<int> top, std::vector<int> bottom) {
    Symbol s{a, b, std::move(top), std::move(bottom)};
    if (!is_valid(s)) throw DomainError("invalid symbol " + s.str());
    return s;
}

Symbol shift(const Symbol& s, int times) {
    Symbol r = s;
    const int g = s.a + s.b;
    for (int t = 0; t < times; ++t) {
        for (int& x : r.top) x += g;
        for (int& y : r.bottom) y += g;
        r.top.insert(r.top.begin(), 0);
        r.bottom.insert(r.bottom.begin(), s.b);
    }
    return r;
}

Symbol canonicalize(const Symbol& s) {
    Symbol r = s;
    const int g = s.a + s.b;
    while (!r.top.empty() && !r.bottom.empty() && r.top.front() == 0 && r.bottom.front() == s.b) {
        r.top.erase(r.top.begin());
        r.bottom.erase(r.bottom.begin());
        for (int& x : r.top) x -= g;
        for (int& y : r.bottom) y -= g;
    }
    return r;
}

Symbol with_content(const Symbol& s, int content) {
    Symbol c = canonicalize(s);
    const int diff = content - c.content();
    if (diff < 0 || diff % 2) throw DomainError("cannot bring " + s.str() + " to content " + std::to_string(content));
    return shift(c, diff / 2);
}

Symbol flip(const Symbol& s) {
    if (s.b != 0) throw DomainError("flip needs b = 0: " + s.str());
    return {s.a, s.b, s.bottom, s.top};
}

std::vector<int> entries(const Symbol& s) {
    std::vector<int> v = s.top;
    v.insert(v.end(), s.bottom.begin(), s.bottom.end());
    std::sort(v.begin(), v.end());
    return v;
}

bool is_special(const Symbol& s) {
    const int d = s.defect();
    if (d != 0 && d != 1) return false;
    for (std::size_t i = 0; i < s.bottom.size(); ++i) {
        if (s.top[i] > s.bottom[i]) return false;
        if (i + 1 < s.top.size() && s.bottom[i] > s.top[i + 1]) return false;
    }
    return true;
}

Symbol special_from_entries(int a, int b, const std::vector<int>& sorted) {
    std::vector<int> m = sorted;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Symbol s{a, b, {}, {}};
        for (std::size_t i = 0; i < m.size(); ++i) (i % 2 ? s.bottom : s.top).push_back(m[i]);
        if (is_valid(s)) return canonicalize(s);
        for (int& x : m) x += a + b;
        m.push_back(0);
        m.push_back(b);
        std::sort(m.begin(), m.end());
    }
    throw DomainError("no special arrangement of " + seq_str(sorted));
}

Symbol special_of(const Symbol& s) { return special_from_entries(s.a, s.b, entries(s)); }

bool similar(const Symbol& s1, const Symbol& s2) {
    if (s1.a != s2.a || s1.b != s2.b) throw DomainError("parameter mismatch: " + s1.str() + " vs " + s2.str());
    if (s1.rank() != s2.rank()) throw DomainError("rank mismatch: " + s1.str() + " vs " + s2.str());
    const int L1 = canonicalize(s1).content(), L2 = canonicalize(s2).content();
    if ((L1 - L2) % 2) return false;
    const int L = std::max(L1, L2);
    return entries(with_content(s1, L)) == entries(with_content(s2, L));
}

std::pair<std::vector<int>, std::vector<int>> bij_B_rows(const Symbol& s) {
    const int g = s.a + s.b;
    std::vector<int> x = s.top, y = s.bottom;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= g * static_cast<int>(i);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= s.b + g * static_cast<int>(i);
    return {x, y};
}

Bipartition bij_B(const Symbol& s) {
    auto [x, y] = bij_B_rows(s);
    return {Partition(x), Partition(y)};
}

Symbol bij_B_inverse(const Bipartition& bp, int d, int a, int b) {
    const int s = std::max({bp.second.length(), bp.first.length() - d, -d, 0});
    const int g = a + b;
    std::vector<int> x = padded_ascending(bp.first, s + d), y = padded_ascending(bp.second, s);
    for (int i = 0; i < s + d; ++i) x[i] += g * i;
    for (int i = 0; i < s; ++i) y[i] += b + g * i;
    return canonicalize(make_symbol(a, b, std::move(x), std::move(y)));
}

Symbol underline(const Symbol& s) {
    if (s.b != 0) throw DomainError("underline needs b = 0: " + s.str());
    const int d = s.defect();
    if (d > 0) return s;
    if (d < 0) return flip(s);
    Bipartition bp = bij_B(s);
    return unordered(bp) == bp ? s : flip(s);
}

Bipartition bij_D(const Symbol& s) { return bij_B(underline(s)); }

Symbol bij_D_inverse(const Bipartition& bp, int d, int a) {
    if (d < 0) throw DomainError("D-inverse needs defect >= 0");
    return bij_B_inverse(d == 0 ? unordered(bp) : bp, d, a, 0);
}

Symbol shriek(const Symbol& s) {
    if (s.a != 1 || s.b != 0) throw DomainError("shriek needs parameters (1,0): " + s.str());
    Symbol r{0, 1, {0}, s.bottom};
    for (int x : s.top) r.top.push_back(x + 1);
    for (int& y : r.bottom) y += 1;
    return r;
}

bool is_canonical(const LinearPresentation& lp) {
    for (std::size_t i = 0; i + 1 < lp.Z.size(); ++i) {
        if (lp.Z[i] > lp.Z[i + 1]) return false;
        if (lp.Z[i] == lp.Z[i + 1] && lp.eps[i] != 0) return false;
    }
    return true;
}

LinearPresentation canonical_linear_presentation(const Symbol& s) {
    if (s.b != 0 || s.a <= 0) throw DomainError("canonical linear presentation needs a > 0, b = 0: " + s.str());
    LinearPresentation lp;
    std::size_t i = 0, j = 0;
    while (i < s.top.size() || j < s.bottom.size()) {
        if (j == s.bottom.size() || (i < s.top.size() && s.top[i] <= s.bottom[j])) {
            lp.Z.push_back(s.top[i++]);
            lp.eps.push_back(0);
        } else {
            lp.Z.push_back(s.bottom[j++]);
            lp.eps.push_back(1);
        }
    }
    return lp;
}

Symbol from_linear_presentation(const LinearPresentation& lp, int a, int b) {
    if (lp.Z.size() != lp.eps.size()) throw DomainError("linear presentation length mismatch");
    std::vector<int> x, y;
    for (std::size_t i = 0; i < lp.Z.size(); ++i) (lp.eps[i] ? y : x).push_back(lp.Z[i]);
    return make_symbol(a, b, std::move(x), std::move(y));
}

Symbol tilde(const Symbol& s) {
    std::vector<int> m;
    for (int x : s.top) m.push_back(2 * x);
    for (int y : s.bottom) m.push_back(2 * y + 1);
    std::sort(m.begin(), m.end());
    return special_from_entries(2, 0, m);
}

Symbol add(const Symbol& s1, const Symbol& s2) {
    if (s1.defect() != s2.defect())
        throw DomainError("cannot add symbols of defects " + std::to_string(s1.defect()) + " and " +
                          std::to_string(s2.defect()));
    const int L = std::max(canonicalize(s1).content(), canonicalize(s2).content());
    Symbol x = with_content(s1, L), y = with_content(s2, L);
    Symbol r{s1.a + s2.a, s1.b + s2.b, x.top, x.bottom};
    for (std::size_t i = 0; i < r.top.size(); ++i) r.top[i] += y.top[i];
    for (std::size_t i = 0; i < r.bottom.size(); ++i) r.bottom[i] += y.bottom[i];
    if (!is_valid(r)) throw DomainError("sum is not a symbol: " + r.str());
    return canonicalize(r);
}

std::vector<Symbol> enumerate_symbols(int a, int b, int d, int n) {
    std::vector<Symbol> out;
    const int m = n - delta_ab(a, b, d);
    if (m < 0) return out;
    for (auto& bp : bipartitions_of(m)) out.push_back(bij_B_inverse(bp, d, a, b));
    return out;
}

std::vector<Symbol> enumerate_unordered_symbols(int a, int d, int n) {
    if (d < 0) throw DomainError("unordered symbols are indexed by defect >= 0");
    if (d > 0) return enumerate_symbols(a, 0, d, n);
    std::vector<Symbol> out;
    for (auto& bp : bipartitions_of(n))
        if (unordered(bp) == bp) out.push_back(bij_B_inverse(bp, 0, a, 0));
    return out;
}

}  // namespace orbitcalc
