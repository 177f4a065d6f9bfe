/**
 * @file springer.hpp
 * @brief Generalized Springer correspondence for SL(N), SO(N), Sp(2n) and Spin(N).
 */
#pragma once

#include <string>
#include <vector>

#include "orbitcalc/symbol.hpp"
#include "orbitcalc/weyl.hpp"

namespace orbitcalc {

enum class GroupKind { SL, SO, Sp, Spin };

/// SL(N), SO(N), Sp(N) with N even, Spin(N).
struct ComplexGroup {
    GroupKind kind = GroupKind::SO;
    int N = 0;

    int rank() const;
    std::string str() const;
    bool operator==(const ComplexGroup&) const = default;
};

ComplexGroup parse_group(const std::string& name, int N);

/// Orbit partition type: B or D for SO and Spin, C for Sp. Throws for SL.
ClassicalType orbit_type(const ComplexGroup& g);

/**
 * Block of the correspondence.
 *
 * param is r for SL, SO and Sp, and d for Spin. For SL, character is j with
 * gcd(j, r) = 1, naming the central character of order r. For even Spin,
 * copy distinguishes the two copies of the rather odd partitions.
 */
struct SpringerBlock {
    int param = 0;
    int character = 0;
    int copy = 0;
    char weyl = 'B';  ///< 'A', 'B' or 'D'
    int weyl_rank = 0;

    bool operator==(const SpringerBlock&) const = default;
};

/// Orbit with a local system: a symbol for SO and Sp, the central character for
/// SL, nothing for Spin. tag separates the two representations attached to a
/// degenerate symbol.
struct OrbitLocalSystem {
    Partition orbit;
    Symbol symbol;
    int order = 1;
    int character = 0;
    int copy = 0;
    int tag = -1;

    bool operator==(const OrbitLocalSystem&) const = default;
};

struct SpringerLabel {
    SpringerBlock block;
    WeylLabel label;
};

std::vector<SpringerBlock> springer_blocks(const ComplexGroup& g);
std::vector<OrbitLocalSystem> block_members(const ComplexGroup& g, const SpringerBlock& b);

SpringerLabel springer_rep(const ComplexGroup& g, const OrbitLocalSystem& pair);
OrbitLocalSystem springer_inverse(const ComplexGroup& g, const SpringerBlock& b, const Bipartition& label);

/// Orbit of a symbol of SO(N) (parameters (2,0)) or Sp(2n) (parameters (1,1)).
Partition p1_symbol(GroupKind kind, const Symbol& s);
Partition p1(const ComplexGroup& g, const OrbitLocalSystem& pair);

}  // namespace orbitcalc
