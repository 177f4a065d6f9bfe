/**
 * @file exceptional.hpp
 * @brief Faithfulness witnesses for the non-classical blocks of E6 and E7.
 *
 * These blocks have relative Weyl group G2 (E6) or F4 (E7). Orbits listed in
 * the tables come with an explicit (J, phi). Every other orbit of the block
 * uses the default witness: J = I_{0,K} and WF(phi) the unique special orbit
 * O_0 of the reductive quotient inside d(O). That branch is recorded, not
 * recomputed, since no exceptional closure data is carried.
 */
#pragma once

#include <string>
#include <vector>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

struct ExceptionalRow {
    std::string orbit;               ///< Bala-Carter label, e.g. "E7(a4)"
    std::vector<int> J;              ///< 1 for nodes in J; affine node first, then Bourbaki order
    std::string quotient;            ///< type of L(F_q), e.g. "A1x2D4"
    std::vector<Partition> wf;       ///< WF(phi), one orbit per listed factor
};

/// "E6" or "E7".
const std::vector<ExceptionalRow>& exceptional_table(const std::string& group);
/// Bala-Carter labels of all nilpotent orbits of the group.
const std::vector<std::string>& exceptional_orbits(const std::string& group);

struct ExceptionalWitness {
    std::string group;
    std::string orbit;
    std::string rule;     ///< "table" or "default"
    ExceptionalRow row;   ///< set for "table"
};

/// Throws DomainError for an unknown group or label.
ExceptionalWitness exceptional_witness(const std::string& group, const std::string& orbit);

}  // namespace orbitcalc
