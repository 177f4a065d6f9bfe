/**
 * @file faithfulness.hpp
 * @brief Witnesses and certificates for x-faithfulness of classical dual orbits.
 *
 * A block x of the generalized Springer correspondence of the dual group fixes
 * the relative affine Weyl group. A parahoric J containing the cuspidal support
 * K is modelled by its factors: each factor carries the finite group series of
 * the reductive quotient, the Harish-Chandra series cut out by x, and the
 * factor of W_{x,J} it contributes. Labels on the W side are bipartitions
 * (partitions for SL), taken as the Harish-Chandra labels of the factor.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitcalc/duality.hpp"
#include "orbitcalc/springer.hpp"
#include "orbitcalc/unipotent.hpp"

namespace orbitcalc {

struct MuNu {
    Partition mu;
    Partition nu;
};

/**
 * mu(lambda) and nu(lambda) for an orbit of SO, Sp or Spin (rather odd
 * lambda). For Spin, nu is taken in the half of d_BV(lambda). SL is not split.
 */
MuNu mu_nu_split(const ComplexGroup& g, const Partition& lambda);

struct FactorModel {
    char type = 'C';       ///< Lie type of the factor of J
    int rank = 0;          ///< k-1 for A_{k-1}
    int copies = 1;        ///< r for SL, 2 for the doubled A factor of Spin
    Series series = Series::C;
    int hc_index = 0;      ///< r of the series, s for 2A
    int defect = 0;        ///< signed defect of the factor symbols
    WeylKind kind = WeylKind::B;
    int weyl_rank = 0;
};

struct ParahoricModel {
    char ambient = 'C';
    int ambient_rank = 0;
    int m = 0;                        ///< rank of the first classical factor
    std::vector<FactorModel> factors;  ///< one entry per factor of W_{x,J}
    bool mirrored = false;            ///< first factor repeated at the far end (Spin)

    std::string shape() const;
};

/// The parahoric for a given m, or nothing when it does not contain K.
std::optional<ParahoricModel> parahoric_model(const ComplexGroup& g, const SpringerBlock& b, int m);
/// Maximal elements of J_x.
std::vector<ParahoricModel> maximal_parahorics(const ComplexGroup& g, const SpringerBlock& b);

/// Pseudo-Levi orbit of J carrying one orbit per W-side factor.
PseudoLeviOrbit pseudo_levi(const ParahoricModel& J, const std::vector<Partition>& orbits);

struct Witness {
    MuNu split;
    ParahoricModel J;
    std::vector<Partition> wf;  ///< WF(phi), one orbit per W-side factor
    bool edge_case = false;     ///< mu = (1,1) with a rank one D factor
};

/// (J, phi) for the orbit lambda in block b.
Witness construct_witness(const ComplexGroup& g, const SpringerBlock& b, const Partition& lambda);

/**
 * Splits S into S1 + S2 with S1 similar to S1sp and S2 similar to S2sp.
 *
 * With shriek_first the sum is S1^! + S2 (S of parameters (1,1), S1 of defect
 * one less than S). Summands are returned at the content of the aligned sum.
 * Throws DomainError when no split exists.
 */
std::pair<Symbol, Symbol> decompose_symbol(const Symbol& S, const Symbol& S1sp, const Symbol& S2sp,
                                           bool shriek_first = false);

struct LocalSystemWitness {
    OrbitLocalSystem member;
    WeylLabel E;
    std::vector<Bipartition> F;     ///< W-side labels, one per factor
    std::vector<Symbol> summands;   ///< S1, S2 when a symbol decomposition exists
    std::string method;             ///< "decomposition", "search", "identity" or "none"
    bool hom_nonzero = false;
};

struct BoundCertificate {
    std::size_t local_system = 0;   ///< index into FaithfulnessReport::local_systems
    std::string shape;
    std::vector<Bipartition> F;
    std::vector<Partition> wf;
    Partition ds;
    std::vector<int> lhs;  ///< s-symbol of the j-induced representation
    std::vector<int> rhs;  ///< s-symbol of E(O, 1)
    bool dominance = false;
    bool ssymbol = false;
    std::string error;
};

struct FaithfulnessReport {
    ComplexGroup group;
    SpringerBlock block;
    Partition orbit;
    Witness witness;
    AcharClass lifted;
    AcharClass expected;
    std::vector<LocalSystemWitness> local_systems;
    std::vector<BoundCertificate> bounds;
    std::vector<std::string> failures;
    bool condition_i = false;
    bool condition_ii = false;
    bool condition_iii = false;
    bool overall = false;
};

FaithfulnessReport check_faithful(const ComplexGroup& g, const SpringerBlock& b, const Partition& lambda);

}  // namespace orbitcalc
