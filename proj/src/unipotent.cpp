#include "orbitcalc/unipotent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace orbitcalc {

namespace {

bool symbol_series(Series s) { return s != Series::A && s != Series::A2; }

std::vector<int> defects(Series s, int n) {
    std::vector<int> out;
    for (int d = 0; delta_ab(1, 0, d) <= n; ++d) {
        const bool ok = (s == Series::B || s == Series::C) ? d % 2 == 1 : s == Series::D ? d % 4 == 0 : d % 4 == 2;
        if (ok) out.push_back(d);
    }
    return out;
}

std::vector<int> doubled_plus(const std::vector<int>& v, int plus) {
    std::vector<int> out;
    for (int x : v) out.push_back(2 * x + plus);
    return out;
}

Partition wf_of_special(Series series, const Symbol& sp) {
    std::vector<int> m;
    if (series == Series::C) {
        m = doubled_plus(sp.top, 0);
        auto y = doubled_plus(sp.bottom, 1);
        m.insert(m.end(), y.begin(), y.end());
    } else {
        m = doubled_plus(sp.top, 1);
        auto y = doubled_plus(sp.bottom, 0);
        m.insert(m.end(), y.begin(), y.end());
    }
    std::sort(m.begin(), m.end());
    Partition p = transpose(partition_from_beta(m));
    if (series == Series::D || series == Series::D2) p = collapse(p, ClassicalType::D);
    return p;
}

std::string levi_name(const std::string& letter, int rank) { return letter + "_" + std::to_string(rank); }

std::mutex special_mutex;
std::map<std::pair<int, int>, std::vector<std::pair<Partition, Symbol>>> special_memo;

}  // namespace

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::A2: return "2A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        default: return "2D";
    }
}

Series series_from_name(const std::string& name) {
    if (name == "A") return Series::A;
    if (name == "2A") return Series::A2;
    if (name == "B") return Series::B;
    if (name == "C") return Series::C;
    if (name == "D") return Series::D;
    if (name == "2D") return Series::D2;
    throw DomainError("unknown series '" + name + "'");
}

std::vector<UnipotentRep> enumerate_unipotent(const FiniteGroupForm& form) {
    if (form.rank < 1) throw DomainError("rank must be at least 1");
    std::vector<UnipotentRep> out;
    if (!symbol_series(form.series)) {
        for (auto& p : partitions_of(form.rank)) out.push_back({form, p, {}, -1});
        return out;
    }
    for (int d : defects(form.series, form.rank))
        for (auto& s : enumerate_unordered_symbols(1, d, form.rank)) {
            if (d == 0 && s.top == s.bottom) {
                out.push_back({form, {}, s, 0});
                out.push_back({form, {}, s, 1});
            } else {
                out.push_back({form, {}, s, -1});
            }
        }
    return out;
}

Family family_of(const UnipotentRep& rep) {
    if (!symbol_series(rep.form.series)) return {rep.partition, {}};
    return {{}, special_of(rep.symbol)};
}

Partition kawanaka_wf(const UnipotentRep& rep) {
    if (!symbol_series(rep.form.series)) return transpose(rep.partition);
    return wf_of_special(rep.form.series, special_of(rep.symbol));
}

std::vector<FamilyOrbit> families_bijection(const FiniteGroupForm& form) {
    std::vector<FamilyOrbit> out;
    std::set<Family> seen;
    for (auto& rep : enumerate_unipotent(form)) {
        Family f = family_of(rep);
        if (seen.insert(f).second) out.push_back({f, kawanaka_wf(rep)});
    }
    return out;
}

Symbol special_symbol_for_orbit(Series series, int rank, const Partition& orbit) {
    if (!symbol_series(series)) throw DomainError("series " + series_name(series) + " has no symbols");
    const int d = (series == Series::B || series == Series::C) ? 1 : 0;
    const int key_series = series == Series::D2 ? static_cast<int>(Series::D) : static_cast<int>(series);
    std::vector<std::pair<Partition, Symbol>> table;
    {
        std::lock_guard<std::mutex> lock(special_mutex);
        auto it = special_memo.find({key_series, rank});
        if (it != special_memo.end()) table = it->second;
    }
    if (table.empty()) {
        for (auto& s : enumerate_unordered_symbols(1, d, rank)) {
            const Symbol sp = special_of(s);
            if (sp == canonicalize(s) || sp == canonicalize(flip(s))) table.push_back({wf_of_special(series, sp), sp});
        }
        std::lock_guard<std::mutex> lock(special_mutex);
        special_memo[{key_series, rank}] = table;
    }
    for (auto& [p, s] : table)
        if (p == orbit) return s;
    throw DomainError(orbit.str() + " is not the wavefront set of a family of " + series_name(series) + "_" +
                      std::to_string(rank));
}

int unitary_series_index(const Partition& lambda) {
    const Partition t = transpose(lambda);
    int diff = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) diff += (lambda[i] - j + t[j] - i - 1) % 2 ? 1 : -1;
    for (int s = 0; s * (s + 1) / 2 <= diff; ++s)
        if (s * (s + 1) / 2 == diff) return s;
    throw DomainError("hook count of " + lambda.str() + " is not triangular");
}

namespace {

Bipartition unitary_label(const Partition& lambda, int s) {
    const int L = lambda.length() % 2 ? lambda.length() : lambda.length() + 1;
    std::vector<int> x, y;
    for (int z : beta_from_partition(lambda, L)) (z % 2 ? y : x).push_back(z / 2);
    Bipartition b{partition_from_beta(x), partition_from_beta(y)};
    return s % 2 ? b.flip() : b;
}

}  // namespace

Partition unitary_from_hc(int n, int s, const Bipartition& label) {
    for (auto& p : partitions_of(n))
        if (unitary_series_index(p) == s && unitary_label(p, s) == label) return p;
    throw DomainError("no unipotent representation of 2A with n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                      " and label " + label.str());
}

HcSeries hc_series(const UnipotentRep& rep) {
    HcSeries h;
    const int n = rep.form.rank;
    switch (rep.form.series) {
        case Series::A:
            h.levi = "T";
            h.weyl = 'A';
            h.weyl_rank = n;
            h.label = {rep.partition, {}};
            return h;
        case Series::A2: {
            const int s = unitary_series_index(rep.partition);
            h.index = s;
            h.levi = levi_name("2A", s * (s + 1) / 2 - 1);
            h.weyl_rank = (n - s * (s + 1) / 2) / 2;
            h.label = unitary_label(rep.partition, s);
            return h;
        }
        default: break;
    }
    const int d = rep.symbol.defect();
    const Series se = rep.form.series;
    if (se == Series::B || se == Series::C) {
        h.index = (d - 1) / 2;
        h.levi = levi_name(se == Series::B ? "B" : "C", h.index * h.index + h.index);
    } else {
        h.index = d / 2;
        h.levi = levi_name(se == Series::D ? "D" : "2D", h.index * h.index);
        if (d == 0) h.weyl = 'D';
    }
    h.weyl_rank = n - delta_ab(1, 0, d);
    h.label = bij_D(rep.symbol);
    return h;
}

}  // namespace orbitcalc
