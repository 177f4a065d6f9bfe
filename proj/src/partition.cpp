#include "orbitcalc/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace orbitcalc {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (int x : parts) {
        if (x < 0) throw DomainError("negative part in partition");
        if (x > 0) parts_.push_back(x);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int x) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), x));
}

int Partition::height(int x) const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [x](int p) { return p >= x; }));
}

std::vector<int> Partition::ascending() const { return {parts_.rbegin(), parts_.rend()}; }

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

char type_letter(ClassicalType t) {
    switch (t) {
        case ClassicalType::B: return 'B';
        case ClassicalType::C: return 'C';
        case ClassicalType::D: return 'D';
    }
    return '?';
}

ClassicalType type_from_letter(char c) {
    switch (c) {
        case 'B': case 'b': return ClassicalType::B;
        case 'C': case 'c': return ClassicalType::C;
        case 'D': case 'd': return ClassicalType::D;
        default: throw DomainError(std::string("unknown classical type '") + c + "'");
    }
}

bool dominance_leq(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::max(a.size(), b.size());
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

bool dominance_leq(const Partition& a, const Partition& b) { return dominance_leq(a.parts(), b.parts()); }

bool dominance_leq_ascending(const std::vector<int>& a, const std::vector<int>& b) {
    return dominance_leq(std::vector<int>(a.rbegin(), a.rend()), std::vector<int>(b.rbegin(), b.rend()));
}

Partition transpose(const Partition& p) {
    std::vector<int> t;
    const int top = p[0];
    for (int x = 1; x <= top; ++x) t.push_back(p.height(x));
    return Partition(std::move(t));
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(v));
}

bool contains(const Partition& big, const Partition& sub) {
    std::map<int, int> m;
    for (int x : big.parts()) ++m[x];
    for (int x : sub.parts())
        if (--m[x] < 0) return false;
    return true;
}

Partition difference(const Partition& big, const Partition& sub) {
    if (!contains(big, sub)) throw DomainError(sub.str() + " is not contained in " + big.str());
    std::vector<int> v = big.parts();
    for (int x : sub.parts()) v.erase(std::find(v.begin(), v.end(), x));
    return Partition(std::move(v));
}

Partition row_sum(const Partition& a, const Partition& b) {
    std::vector<int> v(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return Partition(std::move(v));
}

Partition plus_box(const Partition& p) {
    std::vector<int> v = p.parts();
    if (v.empty()) v.push_back(0);
    v.front() += 1;
    return Partition(std::move(v));
}

Partition minus_box(const Partition& p) {
    if (p.empty()) throw DomainError("cannot remove a box from the empty partition");
    std::vector<int> v = p.parts();
    v.back() -= 1;
    return Partition(std::move(v));
}

Partition scale(const Partition& p, int k) {
    std::vector<int> v = p.parts();
    for (int& x : v) x *= k;
    return Partition(std::move(v));
}

Partition divide(const Partition& p, int k) {
    std::vector<int> v = p.parts();
    for (int& x : v) {
        if (x % k) throw DomainError(p.str() + " is not divisible by " + std::to_string(k));
        x /= k;
    }
    return Partition(std::move(v));
}

bool is_very_even(const Partition& p) {
    for (int x : p.parts())
        if (x % 2 || p.multiplicity(x) % 2) return false;
    return true;
}

bool is_rather_odd(const Partition& p) {
    for (int x : p.parts()) {
        if (x % 2 == 0 && p.multiplicity(x) % 2) return false;
        if (x % 2 == 1 && p.multiplicity(x) > 1) return false;
    }
    return true;
}

namespace {

// Parity of parts whose multiplicity must be even.
int constrained_parity(ClassicalType t) { return t == ClassicalType::C ? 1 : 0; }

bool size_ok(int n, ClassicalType t) { return t == ClassicalType::B ? n % 2 == 1 : n % 2 == 0; }

// Largest part violating the multiplicity rule, or 0.
int largest_offender(const std::vector<int>& v, ClassicalType t) {
    const int par = constrained_parity(t);
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (v[i] > 0 && v[i] % 2 == par && (j - i) % 2) return v[i];
        i = j;
    }
    return 0;
}

}  // namespace

bool is_member(const Partition& p, ClassicalType t) {
    return size_ok(p.size(), t) && largest_offender(p.parts(), t) == 0;
}

Partition collapse(const Partition& p, ClassicalType t) {
    if (!size_ok(p.size(), t))
        throw DomainError("size " + std::to_string(p.size()) + " has the wrong parity for type " + type_letter(t));
    std::vector<int> v = p.parts();
    while (int q = largest_offender(v, t)) {
        auto last = std::find_if(v.begin(), v.end(), [q](int x) { return x < q; }) - 1;
        std::size_t i = last - v.begin();
        v[i] -= 1;
        std::size_t j = i + 1;
        while (j < v.size() && v[j] >= q - 1) ++j;
        if (j == v.size()) v.push_back(0);
        v[j] += 1;
        std::sort(v.begin(), v.end(), std::greater<>());
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    return Partition(std::move(v));
}

ClassicalType dual_type(ClassicalType t) {
    switch (t) {
        case ClassicalType::B: return ClassicalType::C;
        case ClassicalType::C: return ClassicalType::B;
        default: return ClassicalType::D;
    }
}

Partition dbv(const Partition& p, ClassicalType t) {
    if (!is_member(p, t)) throw DomainError(p.str() + " is not a " + type_letter(t) + "-partition");
    switch (t) {
        case ClassicalType::B: return collapse(minus_box(transpose(p)), ClassicalType::C);
        case ClassicalType::C: return collapse(plus_box(transpose(p)), ClassicalType::B);
        default: return collapse(transpose(p), ClassicalType::D);
    }
}

bool is_special(const Partition& p, ClassicalType t) {
    return is_member(p, t) && dbv(dbv(p, t), dual_type(t)) == p;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(rest, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Partition> typed_partitions(int n, ClassicalType t) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (is_member(p, t)) out.push_back(p);
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> v;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw DomainError("bad partition entry '" + tok + "'");
        v.push_back(x);
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']')
            flush();
        else
            tok += c;
    }
    flush();
    return Partition(std::move(v));
}

}  // namespace orbitcalc
