/**
 * @file duality.hpp
 * @brief Saturation, Sommers duality on pseudo-Levi data, and the Achar class model.
 *
 * Lie types are single letters 'A', 'B', 'C', 'D'. Orbit partitions of a type A
 * factor A_{k-1} have size k; classical factors of rank m have size 2m+1 (B)
 * or 2m (C, D).
 */
#pragma once

#include <string>
#include <vector>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Partition size of the orbits of a simple factor of the given type and rank.
int orbit_size(char type, int rank);

struct LeviFactor {
    char type = 'C';
    int rank = 0;        ///< k-1 for A_{k-1}
    Partition orbit;
    int copies = 1;      ///< multiplicity of the orbit in the saturation
};

/**
 * Pseudo-Levi subgroup with an orbit on each factor. Supported shapes:
 * the whole group, r x A_{k-1} in A, C x C in C, D x D in D, D x B in B, and
 * C x A x C in C or D x A x D in D (the A factor with copies = 2).
 */
struct PseudoLeviOrbit {
    char ambient = 'C';
    int ambient_rank = 0;
    std::vector<LeviFactor> factors;

    std::string shape() const;
};

/// Collapse of the union of the factor orbits, in the ambient type.
Partition saturate(const PseudoLeviOrbit& p);
/// Dual orbit of the j-induced Springer representation.
Partition ds(const PseudoLeviOrbit& p);

struct AcharClass {
    Partition sat;
    Partition dual;

    bool operator==(const AcharClass&) const = default;
};

/// d on orbits of the given type: dbv for B/C/D, transpose for A.
Partition d_dual(const Partition& orbit, char dual_type);
/// Type of the group whose orbits d lands in.
char dual_side(char dual_type);

AcharClass d_A_one(const Partition& orbit, char dual_type);
AcharClass lift_class(const PseudoLeviOrbit& p);
bool leq_A(const AcharClass& c1, const AcharClass& c2);

}  // namespace orbitcalc
