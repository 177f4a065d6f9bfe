#include "orbitcalc/springer.hpp"

#include <algorithm>
#include <numeric>

#include "orbitcalc/spin.hpp"

namespace orbitcalc {

namespace {

int half(const ComplexGroup& g) { return g.N / 2; }

int sp_param_defect(int r) { return r % 2 == 0 ? r + 1 : -r; }

SpringerBlock make_block(const ComplexGroup& g, int param, int character, int copy) {
    SpringerBlock b{param, character, copy, 'B', 0};
    const int N = g.N;
    switch (g.kind) {
        case GroupKind::SL:
            if (param < 1 || N % param) throw DomainError("SL block order must divide N");
            if (std::gcd(character, param) != 1 || character < 0 || character >= std::max(param, 1) ||
                (param == 1 && character != 0))
                throw DomainError("character index must be coprime to the block order");
            b.weyl = 'A';
            b.weyl_rank = N / param;
            break;
        case GroupKind::SO:
            if (param < 0 || (param - N) % 2 || param * param > N) throw DomainError("invalid SO block r");
            b.weyl = param == 0 ? 'D' : 'B';
            b.weyl_rank = (N - param * param) / 2;
            break;
        case GroupKind::Sp:
            if (param < 0 || param * (param + 1) / 2 > half(g)) throw DomainError("invalid Sp block r");
            b.weyl_rank = half(g) - param * (param + 1) / 2;
            break;
        case GroupKind::Spin: {
            const int d = param;
            if (((d - N) % 4 + 4) % 4 || d * (2 * d - 1) > N) throw DomainError("invalid Spin block d");
            if (copy < 0 || copy > (N % 2 ? 0 : 1)) throw DomainError("invalid Spin copy");
            b.weyl_rank = (N - d * (2 * d - 1)) / 4;
            break;
        }
    }
    return b;
}

void require_size(const SpringerBlock& b, const Bipartition& label) {
    if (label.size() != b.weyl_rank)
        throw DomainError("label " + label.str() + " has size " + std::to_string(label.size()) + ", expected " +
                          std::to_string(b.weyl_rank));
    if (b.weyl == 'A' && !label.second.empty()) throw DomainError("type A labels are partitions");
}

std::vector<int> minus_staircase(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - static_cast<int>(i);
    return out;
}

}  // namespace

int ComplexGroup::rank() const { return kind == GroupKind::SL ? N - 1 : N / 2; }

std::string ComplexGroup::str() const {
    const char* names[] = {"SL", "SO", "Sp", "Spin"};
    return std::string(names[static_cast<int>(kind)]) + "(" + std::to_string(N) + ")";
}

ComplexGroup parse_group(const std::string& name, int N) {
    std::string u = name;
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    ComplexGroup g;
    if (u == "SL")
        g.kind = GroupKind::SL;
    else if (u == "SO")
        g.kind = GroupKind::SO;
    else if (u == "SP")
        g.kind = GroupKind::Sp;
    else if (u == "SPIN")
        g.kind = GroupKind::Spin;
    else
        throw DomainError("unknown group '" + name + "'");
    if (N < 1 || (g.kind == GroupKind::Sp && N % 2)) throw DomainError("invalid dimension for " + name);
    g.N = N;
    return g;
}

ClassicalType orbit_type(const ComplexGroup& g) {
    switch (g.kind) {
        case GroupKind::SL: throw DomainError("SL orbits carry no classical type");
        case GroupKind::Sp: return ClassicalType::C;
        default: return g.N % 2 ? ClassicalType::B : ClassicalType::D;
    }
}

std::vector<SpringerBlock> springer_blocks(const ComplexGroup& g) {
    std::vector<SpringerBlock> out;
    const int N = g.N;
    switch (g.kind) {
        case GroupKind::SL:
            for (int r = 1; r <= N; ++r) {
                if (N % r) continue;
                for (int j = 0; j < r; ++j)
                    if (std::gcd(j, r) == 1) out.push_back(make_block(g, r, r == 1 ? 0 : j, 0));
            }
            break;
        case GroupKind::SO:
            for (int r = N % 2; r * r <= N; r += 2) out.push_back(make_block(g, r, 0, 0));
            break;
        case GroupKind::Sp:
            for (int r = 0; r * (r + 1) / 2 <= half(g); ++r) out.push_back(make_block(g, r, 0, 0));
            break;
        case GroupKind::Spin:
            for (int copy = 0; copy <= (N % 2 ? 0 : 1); ++copy)
                for (int d = -N; d <= N; ++d)
                    if (((d - N) % 4 + 4) % 4 == 0 && d * (2 * d - 1) <= N) out.push_back(make_block(g, d, 0, copy));
            break;
    }
    return out;
}

std::vector<OrbitLocalSystem> block_members(const ComplexGroup& g, const SpringerBlock& b) {
    std::vector<OrbitLocalSystem> out;
    switch (g.kind) {
        case GroupKind::SL:
            for (auto& p : partitions_of(g.N)) {
                bool ok = true;
                for (int x : p.parts()) ok = ok && x % b.param == 0;
                if (ok) out.push_back({p, {}, b.param, b.character, 0, -1});
            }
            break;
        case GroupKind::SO:
            for (auto& s : enumerate_unordered_symbols(2, b.param, half(g))) {
                const Partition o = p1_symbol(GroupKind::SO, s);
                if (b.param == 0 && s.top == s.bottom) {
                    out.push_back({o, s, 1, 0, 0, 0});
                    out.push_back({o, s, 1, 0, 0, 1});
                } else {
                    out.push_back({o, s, 1, 0, 0, -1});
                }
            }
            break;
        case GroupKind::Sp:
            for (auto& s : enumerate_symbols(1, 1, sp_param_defect(b.param), half(g)))
                out.push_back({p1_symbol(GroupKind::Sp, s), s, 1, 0, 0, -1});
            break;
        case GroupKind::Spin:
            for (auto& l : rather_odd_partitions(g.N))
                if (d_partition(l) == b.param) out.push_back({l, {}, 1, 0, b.copy, -1});
            break;
    }
    return out;
}

SpringerLabel springer_rep(const ComplexGroup& g, const OrbitLocalSystem& pair) {
    switch (g.kind) {
        case GroupKind::SL: {
            const int r = pair.order;
            const auto b = make_block(g, r, pair.character, 0);
            if (pair.orbit.size() != g.N) throw DomainError("orbit is not a partition of N");
            return {b, {WeylKind::B, {divide(pair.orbit, r), {}}}};
        }
        case GroupKind::SO: {
            if (pair.symbol.a != 2 || pair.symbol.b != 0) throw DomainError("SO local systems are (2,0)-symbols");
            const Symbol s = underline(canonicalize(pair.symbol));
            if (s.rank() != half(g)) throw DomainError("symbol rank does not match " + g.str());
            const auto b = make_block(g, s.defect(), 0, 0);
            if (!pair.orbit.empty() && p1_symbol(GroupKind::SO, s) != pair.orbit)
                throw DomainError("symbol " + s.str() + " does not lie over " + pair.orbit.str());
            return {b, {b.weyl == 'D' ? WeylKind::D : WeylKind::B, bij_D(s)}};
        }
        case GroupKind::Sp: {
            if (pair.symbol.a != 1 || pair.symbol.b != 1) throw DomainError("Sp local systems are (1,1)-symbols");
            const Symbol s = canonicalize(pair.symbol);
            const int d = s.defect();
            if (d % 2 == 0) throw DomainError("Sp symbols have odd defect");
            if (s.rank() != half(g)) throw DomainError("symbol rank does not match " + g.str());
            const auto b = make_block(g, d > 0 ? d - 1 : -d, 0, 0);
            if (!pair.orbit.empty() && p1_symbol(GroupKind::Sp, s) != pair.orbit)
                throw DomainError("symbol " + s.str() + " does not lie over " + pair.orbit.str());
            const Bipartition bp = bij_B(s);
            return {b, {WeylKind::B, d > 0 ? bp : bp.flip()}};
        }
        case GroupKind::Spin: {
            if (pair.orbit.size() != g.N || !is_rather_odd(pair.orbit))
                throw DomainError(pair.orbit.str() + " is not a rather odd partition of " + std::to_string(g.N));
            const auto b = make_block(g, d_partition(pair.orbit), 0, pair.copy);
            return {b, {WeylKind::B, rho_recursive(pair.orbit)}};
        }
    }
    throw DomainError("unsupported group");
}

OrbitLocalSystem springer_inverse(const ComplexGroup& g, const SpringerBlock& blk, const Bipartition& label) {
    const auto b = make_block(g, blk.param, blk.character, blk.copy);
    require_size(b, label);
    switch (g.kind) {
        case GroupKind::SL: return {scale(label.first, b.param), {}, b.param, b.character, 0, -1};
        case GroupKind::SO: {
            const Symbol s = bij_D_inverse(label, b.param, 2);
            return {p1_symbol(GroupKind::SO, s), s, 1, 0, 0, s.top == s.bottom && b.param == 0 ? 0 : -1};
        }
        case GroupKind::Sp: {
            const int d = sp_param_defect(b.param);
            const Symbol s = bij_B_inverse(d > 0 ? label : label.flip(), d, 1, 1);
            return {p1_symbol(GroupKind::Sp, s), s, 1, 0, 0, -1};
        }
        case GroupKind::Spin:
            for (auto& l : rather_odd_partitions(g.N))
                if (d_partition(l) == b.param && rho_recursive(l) == label) return {l, {}, 1, 0, b.copy, -1};
            throw DomainError("no rather odd partition with label " + label.str());
    }
    throw DomainError("unsupported group");
}

Partition p1_symbol(GroupKind kind, const Symbol& s) {
    if (kind != GroupKind::SO && kind != GroupKind::Sp) throw DomainError("p1 on symbols is defined for SO and Sp");
    const Symbol sp = special_of(s);
    const int top_plus = kind == GroupKind::SO ? 1 : 0;
    std::vector<int> m;
    for (int x : minus_staircase(sp.top)) m.push_back(2 * x + top_plus);
    // bottom row offset b = 1 for Sp
    for (int y : minus_staircase(sp.bottom)) m.push_back(2 * (y - sp.b) + 1 - top_plus);
    std::sort(m.begin(), m.end());
    return partition_from_beta(m);
}

Partition p1(const ComplexGroup& g, const OrbitLocalSystem& pair) {
    if (g.kind == GroupKind::SO || g.kind == GroupKind::Sp) return p1_symbol(g.kind, pair.symbol);
    return pair.orbit;
}

}  // namespace orbitcalc
