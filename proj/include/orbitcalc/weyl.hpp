/**
 * @file weyl.hpp
 * @brief Littlewood-Richardson coefficients and branching for hyperoctahedral groups.
 */
#pragma once

#include <vector>

#include "orbitcalc/symbol.hpp"

namespace orbitcalc {

/// c^gamma_{alpha,beta}; zero when sizes do not match. Results are memoized (thread-safe).
long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Multiplicity of F1 ⊠ F2 in F restricted to W_i x W_{n-i}.
long long bip_restriction_mult(const Bipartition& F, const Bipartition& F1, const Bipartition& F2);

/// W_n (type B) or its index-two subgroup W'_n (type D).
enum class WeylKind { B, D };

struct WeylLabel {
    WeylKind kind = WeylKind::B;
    Bipartition label;
};

/**
 * Whether Hom over the product of the factor groups into E is nonzero.
 *
 * The factor ranks may sum to less than the rank of E; the remaining
 * coordinates are then unconstrained. Labels of D-kind groups are taken up to
 * flip, and degenerate labels are not distinguished.
 */
bool restriction_nonzero(const WeylLabel& E, const WeylLabel& F1, const WeylLabel& F2);

/// s-symbol of the j-induced representation: the special symbol of the sum.
Symbol j_induce_ssymbol(const std::vector<Symbol>& specials);

/**
 * Spin variant: the sequence 2 Z*(S1) + beta(lambda2) - z at a common length
 * of the parity of S1's content.
 */
std::vector<int> j_induce_spin(const Symbol& s1_special, const Partition& lambda2);

}  // namespace orbitcalc
