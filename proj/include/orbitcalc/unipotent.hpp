/**
 * @file unipotent.hpp
 * @brief Unipotent representations of finite classical groups as combinatorial labels.
 *
 * For series A and ²A the rank field is the size n of the labelling
 * partitions (the group is GL_n or U_n). For B, C, D and ²D it is the rank of
 * the symbols.
 */
#pragma once

#include <string>
#include <vector>

#include "orbitcalc/symbol.hpp"
#include "orbitcalc/weyl.hpp"

namespace orbitcalc {

enum class Series { A, A2, B, C, D, D2 };

std::string series_name(Series s);
Series series_from_name(const std::string& name);

struct FiniteGroupForm {
    Series series = Series::A;
    int rank = 0;
};

struct UnipotentRep {
    FiniteGroupForm form;
    Partition partition;  ///< A and ²A
    Symbol symbol;        ///< B, C, D, ²D: canonical, in underline orientation
    int tag = -1;         ///< 0 or 1 for degenerate D symbols

    bool operator==(const UnipotentRep&) const = default;
};

std::vector<UnipotentRep> enumerate_unipotent(const FiniteGroupForm& form);

/// Family identifier: the partition itself for A and ²A, else the special symbol.
struct Family {
    Partition partition;
    Symbol special;

    auto operator<=>(const Family&) const = default;
    bool operator==(const Family&) const = default;
};

Family family_of(const UnipotentRep& rep);
Partition kawanaka_wf(const UnipotentRep& rep);

struct FamilyOrbit {
    Family family;
    Partition orbit;
};
std::vector<FamilyOrbit> families_bijection(const FiniteGroupForm& form);

/// Special symbol of the family with the given wavefront set (B, C, D, ²D).
Symbol special_symbol_for_orbit(Series series, int rank, const Partition& orbit);

struct HcSeries {
    int index = 0;             ///< r for B, C, D, ²D; s for ²A; 0 for A
    std::string levi;          ///< cuspidal support, e.g. "C_6" or "2A_2"
    char weyl = 'B';           ///< 'A' (symmetric group), 'B' (W_k) or 'D' (W'_k)
    int weyl_rank = 0;
    Bipartition label;         ///< (lambda, ()) for series A
};

HcSeries hc_series(const UnipotentRep& rep);

/// s with (#odd hooks) - (#even hooks) = s(s+1)/2.
int unitary_series_index(const Partition& lambda);
/// Inverse of the ²A labelling on partitions of n.
Partition unitary_from_hc(int n, int s, const Bipartition& label);

}  // namespace orbitcalc
