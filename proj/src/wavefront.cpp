#include "orbitcalc/wavefront.hpp"

namespace orbitcalc {

WavefrontResult wavefront_of_az(char dual_type, int rank, const Partition& orbit) {
    if (rank < 0 || (dual_type != 'A' && rank < 1)) throw DomainError("rank must be positive");
    const int size = orbit_size(dual_type, rank);
    if (orbit.size() != size)
        throw DomainError(orbit.str() + " is not a partition of " + std::to_string(size));
    WavefrontResult r{dual_type, rank, orbit, d_A_one(orbit, dual_type), {}};
    r.barkwf = r.kwf.sat;
    return r;
}

bool wfbound_check(char dual_type, int rank, const Partition& orbit, const AcharClass& candidate) {
    return leq_A(wavefront_of_az(dual_type, rank, orbit).kwf, candidate);
}

}  // namespace orbitcalc
