/**
 * @file symbol.hpp
 * @brief Beta-sets, bipartitions and two-row symbols with gap parameters (a,b).
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Ordered pair of partitions.
struct Bipartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }
    Bipartition flip() const { return {second, first}; }
    bool degenerate() const { return first == second; }
    std::string str() const;

    auto operator<=>(const Bipartition&) const = default;
    bool operator==(const Bipartition&) const = default;
};

/// All bipartitions of n.
std::vector<Bipartition> bipartitions_of(int n);

/// Representative of the flip orbit: larger size first, ties broken lexicographically.
Bipartition unordered(const Bipartition& b);

/// P(x) for a strictly increasing non-negative sequence.
Partition partition_from_beta(const std::vector<int>& x);
/// The beta-set of the given length; throws if length < #lambda.
std::vector<int> beta_from_partition(const Partition& lambda, int length);

/// (0, 1, ..., n-1)
std::vector<int> staircase(int n);

/**
 * @brief Symbol (X,Y) with parameters (a,b).
 *
 * Rows are stored non-decreasing. Values are not forced into canonical shift
 * form; use canonicalize() for that.
 */
struct Symbol {
    int a = 1;
    int b = 0;
    std::vector<int> top;
    std::vector<int> bottom;

    int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
    int content() const { return static_cast<int>(top.size() + bottom.size()); }
    int entry_sum() const;
    int rank() const;
    int relative_rank() const;
    std::string str() const;

    auto operator<=>(const Symbol&) const = default;
    bool operator==(const Symbol&) const = default;
};

int delta_ab(int a, int b, int d);

bool is_valid(const Symbol& s);
/// Builds and validates; throws DomainError on gap violations.
Symbol make_symbol(int a, int b, std::vector<int> top, std::vector<int> bottom);

Symbol shift(const Symbol& s, int times = 1);
/// Shift-minimal representative.
Symbol canonicalize(const Symbol& s);
/// Representative with the given content (>= the canonical content, same parity).
Symbol with_content(const Symbol& s, int content);
Symbol flip(const Symbol& s);

/// Sorted multiset X ∪ Y of this representative.
std::vector<int> entries(const Symbol& s);

bool is_special(const Symbol& s);
/// Special symbol arranged from a sorted multiset, canonicalized.
Symbol special_from_entries(int a, int b, const std::vector<int>& sorted);
Symbol special_of(const Symbol& s);
bool similar(const Symbol& s1, const Symbol& s2);

/// Rows of B(S) as raw non-decreasing sequences (zeros kept).
std::pair<std::vector<int>, std::vector<int>> bij_B_rows(const Symbol& s);
Bipartition bij_B(const Symbol& s);
/// Inverse of B on symbols of defect d.
Symbol bij_B_inverse(const Bipartition& bp, int d, int a, int b);

/// Row ordering used for symbols up to flip (b = 0).
Symbol underline(const Symbol& s);
Bipartition bij_D(const Symbol& s);
/// Inverse of D for defect d >= 0.
Symbol bij_D_inverse(const Bipartition& bp, int d, int a);

/// S^! for a (1,0)-symbol; result has parameters (0,1).
Symbol shriek(const Symbol& s);

struct LinearPresentation {
    std::vector<int> Z;
    std::vector<int> eps;

    bool operator==(const LinearPresentation&) const = default;
};

bool is_canonical(const LinearPresentation& lp);
/// Requires b = 0 and a > 0.
LinearPresentation canonical_linear_presentation(const Symbol& s);
Symbol from_linear_presentation(const LinearPresentation& lp, int a, int b);

/// (2X, 2Y+1)^sp with parameters (2,0).
Symbol tilde(const Symbol& s);

/// Entrywise sum after aligning contents; parameters add.
Symbol add(const Symbol& s1, const Symbol& s2);

/// Canonical representatives of all classes of defect d and rank n.
std::vector<Symbol> enumerate_symbols(int a, int b, int d, int n);
/// Flip classes of defect d >= 0 (b = 0), in underline form.
std::vector<Symbol> enumerate_unordered_symbols(int a, int d, int n);

}  // namespace orbitcalc
