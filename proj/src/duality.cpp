#include "orbitcalc/duality.hpp"

#include <algorithm>

#include "orbitcalc/springer.hpp"
#include "orbitcalc/unipotent.hpp"
#include "orbitcalc/weyl.hpp"

namespace orbitcalc {

namespace {

ClassicalType classical(char t) {
    if (t == 'A') throw DomainError("type A has no classical partition rule");
    return type_from_letter(t);
}

void check_type(char t) {
    if (t != 'A' && t != 'B' && t != 'C' && t != 'D') throw DomainError(std::string("unknown type '") + t + "'");
}

void validate(const PseudoLeviOrbit& p) {
    check_type(p.ambient);
    int total = 0;
    for (auto& f : p.factors) {
        check_type(f.type);
        if (f.copies < 1) throw DomainError("factor multiplicity must be positive");
        if (f.orbit.size() != orbit_size(f.type, f.rank))
            throw DomainError("orbit " + f.orbit.str() + " does not fit factor " + std::string(1, f.type) +
                              std::to_string(f.rank));
        if (f.type != 'A' && !is_member(f.orbit, classical(f.type)))
            throw DomainError(f.orbit.str() + " is not a " + std::string(1, f.type) + "-partition");
        total += f.orbit.size() * f.copies;
    }
    if (total != orbit_size(p.ambient, p.ambient_rank))
        throw DomainError("factor orbits of " + p.shape() + " do not add up to the ambient size");
}

Symbol family_special(const LeviFactor& f) {
    const Series s = f.type == 'B' ? Series::B : f.type == 'C' ? Series::C : Series::D;
    return special_symbol_for_orbit(s, f.rank, f.orbit);
}

bool is_shape(const PseudoLeviOrbit& p, char ambient, const std::string& types) {
    if (p.ambient != ambient || p.factors.size() != types.size()) return false;
    for (std::size_t i = 0; i < types.size(); ++i)
        if (p.factors[i].type != types[i]) return false;
    return true;
}

Partition spin_shape_ds(const PseudoLeviOrbit& p) {
    const auto& f1 = p.factors[0];
    const auto& fa = p.factors[1];
    const auto& f3 = p.factors[2];
    if (f1.rank != f3.rank || f1.orbit != f3.orbit || fa.copies != 2 || f1.copies != 1 || f3.copies != 1)
        throw DomainError("shape " + p.shape() + " must be symmetric with a doubled A factor");
    auto seq = j_induce_spin(family_special(f1), transpose(fa.orbit));
    if (!std::is_sorted(seq.begin(), seq.end())) throw DomainError("j-induced sequence is not non-decreasing");
    return p1_symbol(GroupKind::SO, special_from_entries(2, 0, seq));
}

}  // namespace

int orbit_size(char type, int rank) {
    switch (type) {
        case 'A': return rank + 1;
        case 'B': return 2 * rank + 1;
        case 'C':
        case 'D': return 2 * rank;
        default: throw DomainError(std::string("unknown type '") + type + "'");
    }
}

std::string PseudoLeviOrbit::shape() const {
    std::string s;
    for (auto& f : factors) {
        if (!s.empty()) s += "x";
        s += std::string(1, f.type) + std::to_string(f.rank);
    }
    return s.empty() ? "()" : s;
}

Partition saturate(const PseudoLeviOrbit& p) {
    validate(p);
    Partition u;
    for (auto& f : p.factors)
        for (int c = 0; c < f.copies; ++c) u = union_of(u, f.orbit);
    return p.ambient == 'A' ? u : collapse(u, classical(p.ambient));
}

Partition ds(const PseudoLeviOrbit& p) {
    validate(p);
    if (p.factors.size() == 1 && p.factors[0].type == p.ambient && p.factors[0].rank == p.ambient_rank &&
        p.factors[0].copies == 1)
        return d_dual(p.factors[0].orbit, p.ambient);
    if (p.ambient == 'A') {
        Partition sum;
        for (auto& f : p.factors) {
            if (f.type != 'A') throw DomainError("shape " + p.shape() + " is not a type A pseudo-Levi");
            for (int c = 0; c < f.copies; ++c) sum = row_sum(sum, transpose(f.orbit));
        }
        return sum;
    }
    if (is_shape(p, 'C', "CC"))
        return p1_symbol(GroupKind::SO, j_induce_ssymbol({family_special(p.factors[0]), family_special(p.factors[1])}));
    if (is_shape(p, 'D', "DD"))
        return p1_symbol(GroupKind::SO, j_induce_ssymbol({family_special(p.factors[0]), family_special(p.factors[1])}));
    if (is_shape(p, 'B', "DB"))
        return p1_symbol(GroupKind::Sp,
                         j_induce_ssymbol({shriek(flip(family_special(p.factors[0]))), family_special(p.factors[1])}));
    if (is_shape(p, 'C', "CAC") || is_shape(p, 'D', "DAD")) return spin_shape_ds(p);
    throw DomainError("unsupported pseudo-Levi shape " + p.shape() + " in " + std::string(1, p.ambient) +
                      std::to_string(p.ambient_rank));
}

Partition d_dual(const Partition& orbit, char dual_type) {
    check_type(dual_type);
    if (dual_type == 'A') return transpose(orbit);
    const auto t = classical(dual_type);
    if (!is_member(orbit, t)) throw DomainError(orbit.str() + " is not a " + std::string(1, dual_type) + "-partition");
    return dbv(orbit, t);
}

char dual_side(char dual_type) {
    check_type(dual_type);
    return dual_type == 'B' ? 'C' : dual_type == 'C' ? 'B' : dual_type;
}

AcharClass d_A_one(const Partition& orbit, char dual_type) { return {d_dual(orbit, dual_type), orbit}; }

AcharClass lift_class(const PseudoLeviOrbit& p) { return {saturate(p), ds(p)}; }

bool leq_A(const AcharClass& c1, const AcharClass& c2) {
    return dominance_leq(c1.sat, c2.sat) && dominance_leq(c2.dual, c1.dual);
}

}  // namespace orbitcalc
