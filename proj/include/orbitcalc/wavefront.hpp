/**
 * @file wavefront.hpp
 * @brief Wavefront sets of Aubert-Zelevinsky duals from the dual orbit.
 *
 * The dual group is given by a type letter and a rank. Its orbit O is the
 * nilpotent part of the parameter of AZ(X); whether X has real infinitesimal
 * character is left to the caller.
 */
#pragma once

#include "orbitcalc/duality.hpp"

namespace orbitcalc {

struct WavefrontResult {
    char dual_type = 'C';
    int rank = 0;
    Partition orbit;
    AcharClass kwf;   ///< canonical unramified wavefront set, d_A(O, 1)
    Partition barkwf; ///< geometric wavefront set over the residue field, d(O)
};

/// Throws DomainError when orbit is not an orbit of the dual group.
WavefrontResult wavefront_of_az(char dual_type, int rank, const Partition& orbit);

/// d_A(O, 1) <=_A candidate.
bool wfbound_check(char dual_type, int rank, const Partition& orbit, const AcharClass& candidate);

}  // namespace orbitcalc
