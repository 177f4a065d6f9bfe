#include "orbitcalc/faithfulness.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <tuple>

#include "orbitcalc/spin.hpp"
#include "orbitcalc/weyl.hpp"

namespace orbitcalc {

namespace {

struct FactorRep {
    Bipartition label;
    Partition wf;
    Partition partition;  ///< A and 2A
    Symbol special;       ///< symbol series
};

Partition rank_zero_orbit(Series s) { return s == Series::B ? Partition{1} : Partition{}; }

Symbol rank_zero_special(Series s) {
    if (s == Series::B || s == Series::C) return make_symbol(1, 0, {0}, {});
    return make_symbol(1, 0, {}, {});
}

std::vector<FactorRep> compute_factor_reps(const FactorModel& f) {
    std::vector<FactorRep> out;
    auto push = [&out](FactorRep r) {
        for (auto& o : out)
            if (o.label == r.label) return;
        out.push_back(std::move(r));
    };
    switch (f.series) {
        case Series::A:
            for (auto& p : partitions_of(f.rank + 1)) push({{p, {}}, transpose(p), p, {}});
            return out;
        case Series::A2: {
            const int n = f.rank + 1;
            if (n == 0) {
                if (f.hc_index == 0 && f.weyl_rank == 0) push({{}, {}, {}, {}});
                return out;
            }
            for (auto& p : partitions_of(n)) {
                const auto h = hc_series({{Series::A2, n}, p, {}, -1});
                if (h.index != f.hc_index) continue;
                if (h.weyl_rank != f.weyl_rank) throw DomainError("2A relative rank mismatch");
                push({h.label, transpose(p), p, {}});
            }
            return out;
        }
        default: break;
    }
    if (f.rank == 0) {
        if (f.hc_index == 0 && f.weyl_rank == 0)
            push({{}, rank_zero_orbit(f.series), {}, rank_zero_special(f.series)});
        return out;
    }
    for (auto& rep : enumerate_unipotent({f.series, f.rank})) {
        const auto h = hc_series(rep);
        if (h.index != f.hc_index) continue;
        if (h.weyl_rank != f.weyl_rank)
            throw DomainError("relative rank mismatch in " + series_name(f.series) + "_" + std::to_string(f.rank));
        FactorRep r{h.label, kawanaka_wf(rep), {}, family_of(rep).special};
        push(r);
        if (f.kind == WeylKind::B && h.weyl == 'D') {
            r.label = r.label.flip();
            push(r);
        }
    }
    return out;
}

using FactorKey = std::tuple<int, int, int, int, int>;

class RepCache {
public:
    const std::vector<FactorRep>& get(const FactorModel& f) {
        const FactorKey key{static_cast<int>(f.series), f.rank, f.hc_index, static_cast<int>(f.kind), f.weyl_rank};
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, compute_factor_reps(f)).first;
        return it->second;
    }

private:
    std::map<FactorKey, std::vector<FactorRep>> cache_;
};

std::optional<ParahoricModel> two_factor(char ambient, int n, int m, FactorModel f1, FactorModel f2) {
    if (m < 0 || m > n || f1.weyl_rank < 0 || f2.weyl_rank < 0) return std::nullopt;
    return ParahoricModel{ambient, n, m, {f1, f2}, false};
}

char orbit_letter(const ComplexGroup& g) {
    return g.kind == GroupKind::SL ? 'A' : type_letter(orbit_type(g));
}

void require_member(const ComplexGroup& g, const Partition& lambda) {
    if (lambda.size() != g.N) throw DomainError(lambda.str() + " is not a partition of " + std::to_string(g.N));
    if (g.kind == GroupKind::Spin) {
        if (!is_rather_odd(lambda)) throw DomainError(lambda.str() + " is not rather odd");
    } else if (g.kind != GroupKind::SL && !is_member(lambda, orbit_type(g))) {
        throw DomainError(lambda.str() + " is not an orbit of " + g.str());
    }
}

std::vector<int> pad_sequence(std::vector<int> v, std::size_t length) {
    while (v.size() < length) {
        for (int& x : v) x += 2;
        v.insert(v.begin(), {0, 0});
    }
    return v;
}

std::optional<Bipartition> label_of_symbol(const FactorModel& f, const Symbol& s) {
    if (f.rank == 0) return Bipartition{};
    const auto h = hc_series({{f.series, f.rank}, {}, underline(canonicalize(s)), -1});
    if (h.index != f.hc_index) return std::nullopt;
    return h.label;
}

const FactorRep* find_family(const std::vector<FactorRep>& reps, const Partition& wf) {
    for (auto& r : reps)
        if (r.wf == wf) return &r;
    return nullptr;
}

bool hom_nonzero(const ComplexGroup& g, const WeylLabel& E, const ParahoricModel& J,
                 const std::vector<Bipartition>& F) {
    if (g.kind == GroupKind::SL) return E.label == F[0];
    return restriction_nonzero(E, {J.factors[0].kind, F[0]}, {J.factors[1].kind, F[1]});
}

void ssymbol_certificate(const ComplexGroup& g, const OrbitLocalSystem& member, const Partition& lambda,
                         const FactorRep& a, const FactorRep* b, BoundCertificate& c) {
    switch (g.kind) {
        case GroupKind::SL:
            c.lhs = c.ds.ascending();
            c.rhs = lambda.ascending();
            break;
        case GroupKind::Spin: {
            c.lhs = j_induce_spin(a.special, b->partition);
            c.rhs = trivial_ssymbol_sequence(lambda);
            std::sort(c.lhs.begin(), c.lhs.end());
            std::sort(c.rhs.begin(), c.rhs.end());
            if ((c.lhs.size() - c.rhs.size()) % 2) throw DomainError("s-symbol lengths differ in parity");
            const std::size_t L = std::max(c.lhs.size(), c.rhs.size());
            c.lhs = pad_sequence(c.lhs, L);
            c.rhs = pad_sequence(c.rhs, L);
            break;
        }
        default: {
            const Symbol first = g.kind == GroupKind::Sp ? shriek(flip(a.special)) : a.special;
            const Symbol lhs = j_induce_ssymbol({first, b->special});
            const Symbol rhs = special_of(member.symbol);
            const int L1 = canonicalize(lhs).content(), L2 = canonicalize(rhs).content();
            if ((L1 - L2) % 2) throw DomainError("s-symbol contents differ in parity");
            const int L = std::max(L1, L2);
            c.lhs = entries(with_content(lhs, L));
            c.rhs = entries(with_content(rhs, L));
        }
    }
    c.ssymbol = dominance_leq_ascending(c.rhs, c.lhs);
}

}  // namespace

std::string ParahoricModel::shape() const {
    std::string s;
    auto add = [&s](const FactorModel& f) {
        if (!s.empty()) s += "x";
        if (f.copies > 1 && f.series == Series::A) s += std::to_string(f.copies);
        s += std::string(1, f.type) + std::to_string(f.rank);
    };
    for (auto& f : factors) add(f);
    if (mirrored && !factors.empty()) add(factors.front());
    return s;
}

MuNu mu_nu_split(const ComplexGroup& g, const Partition& lambda) {
    if (g.kind == GroupKind::SL) throw DomainError("SL orbits are not split");
    require_member(g, lambda);
    const bool spin = g.kind == GroupKind::Spin;
    const int parity = (g.kind == GroupKind::Sp || g.N % 2 == 0) ? 1 : 0;
    const Partition t = transpose(lambda);
    std::vector<int> mu;
    int last = -1;
    for (int x : t.parts()) {
        if (x == last || x % 2 != parity) continue;
        last = x;
        const int k = t.multiplicity(x);
        int take = 0;
        if (k % 2) take = 1;
        else if (spin ? k % 4 == 0 : true) take = 2;
        for (int i = 0; i < take; ++i) mu.push_back(x);
    }
    MuNu out;
    out.mu = Partition(mu);
    if (out.mu.size() % 2) throw DomainError("mu(" + lambda.str() + ") has odd size");
    const Partition dual = spin ? half_dbv(lambda) : dbv(lambda, orbit_type(g));
    out.nu = difference(dual, out.mu);
    return out;
}

std::optional<ParahoricModel> parahoric_model(const ComplexGroup& g, const SpringerBlock& b, int m) {
    const int n = g.N / 2;
    switch (g.kind) {
        case GroupKind::SL: {
            const int r = b.param, k = g.N / r;
            FactorModel f{'A', k - 1, r, Series::A, 0, 0, WeylKind::B, k};
            return ParahoricModel{'A', g.N - 1, 0, {f}, false};
        }
        case GroupKind::SO: {
            const int r = b.param;
            if (g.N % 2) {
                const int c = (r * r - 1) / 4, idx = (r - 1) / 2;
                return two_factor('C', n, m, {'C', m, 1, Series::C, idx, r, WeylKind::B, m - c},
                                  {'C', n - m, 1, Series::C, idx, r, WeylKind::B, n - m - c});
            }
            const int c = r * r / 4;
            const Series se = r % 4 == 0 ? Series::D : Series::D2;
            const WeylKind kind = r == 0 ? WeylKind::D : WeylKind::B;
            return two_factor('D', n, m, {'D', m, 1, se, r / 2, r, kind, m - c},
                              {'D', n - m, 1, se, r / 2, r, kind, n - m - c});
        }
        case GroupKind::Sp: {
            const int r = b.param;
            const int d = r % 2 == 0 ? r + 1 : -r;
            const int e = d - 1, ae = std::abs(e), ad = std::abs(d);
            const int i1 = ae / 2, i2 = (ad - 1) / 2;
            return two_factor(
                'B', n, m,
                {'D', m, 1, ae % 4 == 0 ? Series::D : Series::D2, i1, e, e == 0 ? WeylKind::D : WeylKind::B,
                 m - i1 * i1},
                {'B', n - m, 1, Series::B, i2, d, WeylKind::B, n - m - i2 * i2 - i2});
        }
        case GroupKind::Spin: {
            const int d = b.param;
            const int r = d > 0 ? d - 1 : -d;
            const int size2 = n - 2 * m;
            const int t = size2 - r * (r + 1) / 2;
            if (m < 0 || size2 < 0 || t < 0 || t % 2) return std::nullopt;
            FactorModel f1;
            if (g.N % 2)
                f1 = {'C', m, 1, Series::C, (std::abs(d) - 1) / 2, d, WeylKind::B, m - (d * d - 1) / 4};
            else
                f1 = {'D', m, 1, d % 4 == 0 ? Series::D : Series::D2, std::abs(d) / 2, d, WeylKind::B, m - d * d / 4};
            FactorModel f2{'A', size2 - 1, 2, Series::A2, r, 0, WeylKind::B, t / 2};
            if (f1.weyl_rank < 0) return std::nullopt;
            return ParahoricModel{g.N % 2 ? 'C' : 'D', n, m, {f1, f2}, true};
        }
    }
    return std::nullopt;
}

std::vector<ParahoricModel> maximal_parahorics(const ComplexGroup& g, const SpringerBlock& b) {
    std::vector<ParahoricModel> out;
    const int n = g.N / 2;
    auto keep = [&out](std::optional<ParahoricModel> p) {
        if (p) out.push_back(*p);
    };
    switch (g.kind) {
        case GroupKind::SL: keep(parahoric_model(g, b, 0)); break;
        case GroupKind::SO:
            for (int m = 0; m <= n; ++m) {
                // D_1 next to another factor is not a subdiagram of the affine D diagram
                if (g.N % 2 == 0 && b.param == 0 && n >= 2 && (m == 1 || n - m == 1)) continue;
                keep(parahoric_model(g, b, m));
            }
            break;
        case GroupKind::Sp:
            for (int m = 0; m <= n; ++m) {
                if (b.param == 0 && m == 1) continue;
                keep(parahoric_model(g, b, m));
            }
            break;
        case GroupKind::Spin:
            for (int m = 0; 2 * m <= n; ++m) {
                if (g.N % 2 == 0 && b.param == 0 && m == 1) continue;
                keep(parahoric_model(g, b, m));
            }
            break;
    }
    return out;
}

PseudoLeviOrbit pseudo_levi(const ParahoricModel& J, const std::vector<Partition>& orbits) {
    if (orbits.size() != J.factors.size()) throw DomainError("one orbit per factor of " + J.shape() + " expected");
    PseudoLeviOrbit p{J.ambient, J.ambient_rank, {}};
    for (std::size_t i = 0; i < orbits.size(); ++i)
        p.factors.push_back({J.factors[i].type, J.factors[i].rank, orbits[i], J.factors[i].copies});
    if (J.mirrored) p.factors.push_back(p.factors.front());
    return p;
}

Witness construct_witness(const ComplexGroup& g, const SpringerBlock& b, const Partition& lambda) {
    require_member(g, lambda);
    Witness w;
    if (g.kind == GroupKind::SL) {
        w.split.mu = divide(lambda, b.param);
        w.J = *parahoric_model(g, b, 0);
        w.wf = {transpose(w.split.mu)};
        return w;
    }
    w.split = mu_nu_split(g, lambda);
    const int m = w.split.mu.size() / 2;
    auto J = parahoric_model(g, b, m);
    if (!J) throw DomainError("no parahoric of rank " + std::to_string(m) + " contains the cuspidal support");
    w.J = *J;
    w.wf = {w.split.mu, w.split.nu};
    const bool d_first = g.kind == GroupKind::Sp || (g.kind == GroupKind::SO && g.N % 2 == 0);
    w.edge_case = d_first && w.split.mu == Partition{1, 1};
    return w;
}

std::pair<Symbol, Symbol> decompose_symbol(const Symbol& S, const Symbol& S1sp, const Symbol& S2sp,
                                           bool shriek_first) {
    const int d = S.defect();
    const int d1 = shriek_first ? d - 1 : d;
    const Symbol c = canonicalize(S), c1 = canonicalize(S1sp), c2 = canonicalize(S2sp);
    const int lag = shriek_first ? 1 : 0;
    int L0 = std::max({c.content(), c1.content() + lag, c2.content()});
    for (int L = L0; L <= L0 + 5; ++L) {
        const int L1 = L - lag;
        if ((L - c.content()) % 2 || (L1 - c1.content()) % 2 || (L - c2.content()) % 2) continue;
        if ((L1 + d1) % 2 || L1 + d1 < 0 || L1 - d1 < 0) continue;
        const Symbol target = with_content(c, L);
        const auto ent = entries(with_content(c1, L1));
        const std::size_t top_size = static_cast<std::size_t>((L1 + d1) / 2);
        std::vector<int> doubles, singles;
        bool ok = true;
        for (std::size_t i = 0; i < ent.size();) {
            std::size_t j = i;
            while (j < ent.size() && ent[j] == ent[i]) ++j;
            if (j - i > 2) ok = false;
            (j - i == 2 ? doubles : singles).push_back(ent[i]);
            i = j;
        }
        if (!ok || doubles.size() > top_size || top_size - doubles.size() > singles.size()) continue;
        const std::size_t pick = top_size - doubles.size();
        for (unsigned long mask = 0; mask < (1UL << singles.size()); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != pick) continue;
            std::vector<int> top = doubles, bottom = doubles;
            for (std::size_t i = 0; i < singles.size(); ++i) ((mask >> i) & 1 ? top : bottom).push_back(singles[i]);
            std::sort(top.begin(), top.end());
            std::sort(bottom.begin(), bottom.end());
            const Symbol s1{1, 0, top, bottom};
            if (!is_valid(s1)) continue;
            const Symbol first = shriek_first ? shriek(s1) : s1;
            if (first.top.size() != target.top.size() || first.bottom.size() != target.bottom.size()) continue;
            Symbol s2{target.a - first.a, target.b - first.b, target.top, target.bottom};
            if (s2.a != 1 || s2.b != 0) throw DomainError("summand parameters do not add up");
            for (std::size_t i = 0; i < s2.top.size(); ++i) s2.top[i] -= first.top[i];
            for (std::size_t i = 0; i < s2.bottom.size(); ++i) s2.bottom[i] -= first.bottom[i];
            if (!is_valid(s2) || s2.rank() != c2.rank() || !similar(s2, c2)) continue;
            return {s1, s2};
        }
    }
    throw DomainError("no decomposition of " + S.str() + " along " + S1sp.str() + " and " + S2sp.str());
}

FaithfulnessReport check_faithful(const ComplexGroup& g, const SpringerBlock& b, const Partition& lambda) {
    FaithfulnessReport rep;
    rep.group = g;
    rep.block = b;
    rep.orbit = lambda;
    require_member(g, lambda);
    std::vector<OrbitLocalSystem> members;
    for (auto& m : block_members(g, b))
        if (p1(g, m) == lambda) members.push_back(m);
    if (members.empty()) throw DomainError(lambda.str() + " carries no local system in this block");
    rep.expected = d_A_one(lambda, orbit_letter(g));

    try {
        rep.witness = construct_witness(g, b, lambda);
    } catch (const DomainError& e) {
        rep.failures.push_back(std::string("witness: ") + e.what());
        return rep;
    }
    const Witness& w = rep.witness;

    try {
        rep.lifted = lift_class(pseudo_levi(w.J, w.wf));
        rep.condition_i = rep.lifted == rep.expected;
        if (!rep.condition_i) rep.failures.push_back("condition (i): lifted class differs");
    } catch (const DomainError& e) {
        rep.failures.push_back(std::string("condition (i): ") + e.what());
    }

    RepCache cache;
    // condition (ii)
    rep.condition_ii = true;
    for (auto& member : members) {
        LocalSystemWitness lw;
        lw.member = member;
        lw.E = springer_rep(g, member).label;
        lw.method = "none";
        if (g.kind == GroupKind::SL) {
            lw.F = {{w.split.mu, {}}};
            lw.hom_nonzero = hom_nonzero(g, lw.E, w.J, lw.F);
            lw.method = "identity";
        } else {
            const auto& reps1 = cache.get(w.J.factors[0]);
            const auto& reps2 = cache.get(w.J.factors[1]);
            const FactorRep* fam1 = find_family(reps1, w.wf[0]);
            const FactorRep* fam2 = find_family(reps2, w.wf[1]);
            if (g.kind != GroupKind::Spin && fam1 && fam2) {
                try {
                    auto [s1, s2] = decompose_symbol(member.symbol, fam1->special, fam2->special,
                                                     g.kind == GroupKind::Sp);
                    auto l1 = label_of_symbol(w.J.factors[0], s1);
                    auto l2 = label_of_symbol(w.J.factors[1], s2);
                    if (l1 && l2 && hom_nonzero(g, lw.E, w.J, {*l1, *l2})) {
                        lw.F = {*l1, *l2};
                        lw.summands = {s1, s2};
                        lw.hom_nonzero = true;
                        lw.method = "decomposition";
                    }
                } catch (const DomainError&) {
                }
            }
            for (std::size_t i = 0; !lw.hom_nonzero && i < reps1.size(); ++i) {
                if (reps1[i].wf != w.wf[0]) continue;
                for (auto& r2 : reps2) {
                    if (r2.wf != w.wf[1]) continue;
                    if (hom_nonzero(g, lw.E, w.J, {reps1[i].label, r2.label})) {
                        lw.F = {reps1[i].label, r2.label};
                        lw.hom_nonzero = true;
                        lw.method = "search";
                        break;
                    }
                }
            }
        }
        if (!lw.hom_nonzero) {
            rep.condition_ii = false;
            rep.failures.push_back("condition (ii): no F for local system with label " + lw.E.label.str());
        }
        rep.local_systems.push_back(std::move(lw));
    }

    // condition (iii), maximal J' only
    rep.condition_iii = true;
    for (auto& J : maximal_parahorics(g, b)) {
        const auto& reps1 = cache.get(J.factors[0]);
        const std::vector<FactorRep>* reps2 = J.factors.size() > 1 ? &cache.get(J.factors[1]) : nullptr;
        for (std::size_t k = 0; k < rep.local_systems.size(); ++k) {
            const auto& lw = rep.local_systems[k];
            auto consider = [&](const FactorRep& a, const FactorRep* bb) {
                std::vector<Bipartition> F{a.label};
                if (bb) F.push_back(bb->label);
                if (!hom_nonzero(g, lw.E, J, F)) return;
                BoundCertificate c;
                c.local_system = k;
                c.shape = J.shape();
                c.F = F;
                c.wf = {a.wf};
                if (bb) c.wf.push_back(bb->wf);
                try {
                    c.ds = ds(pseudo_levi(J, c.wf));
                    c.dominance = dominance_leq(lambda, c.ds);
                    ssymbol_certificate(g, lw.member, lambda, a, bb, c);
                } catch (const DomainError& e) {
                    c.error = e.what();
                }
                if (!c.dominance || !c.ssymbol || !c.error.empty()) {
                    rep.condition_iii = false;
                    rep.failures.push_back("condition (iii): " + c.shape + " F=" + F[0].str() +
                                           (bb ? " " + F[1].str() : "") + " ds=" + c.ds.str() +
                                           (c.error.empty() ? "" : " (" + c.error + ")"));
                }
                rep.bounds.push_back(std::move(c));
            };
            for (auto& a : reps1) {
                if (!reps2) {
                    consider(a, nullptr);
                    continue;
                }
                for (auto& bb : *reps2) consider(a, &bb);
            }
        }
    }
    rep.overall = rep.condition_i && rep.condition_ii && rep.condition_iii;
    return rep;
}

}  // namespace orbitcalc
