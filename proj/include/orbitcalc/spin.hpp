/**
 * @file spin.hpp
 * @brief Combinatorics of rather odd partitions used for Spin groups.
 *
 * Sequences indexed by the parts of lambda follow the non-decreasing order
 * lambda_1 <= ... <= lambda_m.
 */
#pragma once

#include <vector>

#include "orbitcalc/partition.hpp"
#include "orbitcalc/symbol.hpp"

namespace orbitcalc {

/// 0 for even m, 1 for m = 1 mod 4, -1 for m = 3 mod 4.
int d_int(int m);
int d_partition(const Partition& lambda);

/// Rather odd partitions of n.
std::vector<Partition> rather_odd_partitions(int n);

/// The eight-case recursion.
Bipartition rho_recursive(const Partition& lambda);
/// The four-case recursion for rho-tilde.
Bipartition rho_tilde(const Partition& lambda);
/// rho obtained from rho-tilde by the sign of d(lambda).
Bipartition rho_from_tilde(const Partition& lambda);
/// Non-recursive union formula.
Bipartition rho_closed(const Partition& lambda);

/// Per-part sequences q, r, epsilon, delta, gamma.
struct SpinSequences {
    std::vector<int> q;
    std::vector<int> r;
    std::vector<int> eps;
    std::vector<int> delta;
    std::vector<int> gamma;
};
SpinSequences spin_sequences(const Partition& lambda);

/// Linear presentation (q + z - delta, eps).
LinearPresentation spin_presentation(const Partition& lambda);
/// The (2,0)-symbol with that presentation.
Symbol spin_symbol(const Partition& lambda);
/// 2q + z + eps - 2 delta.
std::vector<int> trivial_ssymbol_sequence(const Partition& lambda);

/// d_BV through the tail-sum formula; N odd gives a C-partition, N even a D-partition.
Partition dbv_rather_odd(const Partition& lambda);
/// The partition h with h ∪ h = dbv_rather_odd(lambda).
Partition half_dbv(const Partition& lambda);

}  // namespace orbitcalc
