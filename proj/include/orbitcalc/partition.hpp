/**
 * @file partition.hpp
 * @brief Integer partitions, dominance, and the B/C/D orbit combinatorics.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

/**
 * @brief A partition stored as a non-increasing list of positive parts.
 *
 * Any input order is accepted; zeros are dropped and parts are sorted.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part (0-based), zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int multiplicity(int x) const;
    int height(int x) const;  ///< number of parts >= x

    /// Parts in non-decreasing order.
    std::vector<int> ascending() const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

enum class ClassicalType { B, C, D };

char type_letter(ClassicalType t);
ClassicalType type_from_letter(char c);

// Dominance on integer sequences, padded with zeros at the end.
bool dominance_leq(const std::vector<int>& a, const std::vector<int>& b);
bool dominance_leq(const Partition& a, const Partition& b);

// Same order for non-decreasing sequences: compares suffix sums with the
// sequences right-aligned (zeros padded in front).
bool dominance_leq_ascending(const std::vector<int>& a, const std::vector<int>& b);

Partition transpose(const Partition& p);
Partition union_of(const Partition& a, const Partition& b);
bool contains(const Partition& big, const Partition& sub);  ///< sub ⊆ big (multiplicities)
Partition difference(const Partition& big, const Partition& sub);  ///< big \ sub
Partition row_sum(const Partition& a, const Partition& b);  ///< (a_i + b_i)_i
Partition plus_box(const Partition& p);   ///< λ^+ : first part + 1
Partition minus_box(const Partition& p);  ///< λ^- : last part - 1
Partition scale(const Partition& p, int k);
/// Divides every part by k; throws if some part is not a multiple of k.
Partition divide(const Partition& p, int k);

bool is_very_even(const Partition& p);
bool is_rather_odd(const Partition& p);

/// Parity and multiplicity rule of the given type, including the size parity
/// (odd for B, even for C and D).
bool is_member(const Partition& p, ClassicalType t);

/// Largest member of type t dominated by p.
Partition collapse(const Partition& p, ClassicalType t);

/// Barbasch-Vogan dual. B -> C, C -> B, D -> D.
Partition dbv(const Partition& p, ClassicalType t);
ClassicalType dual_type(ClassicalType t);

/// Special orbits are the image of dbv.
bool is_special(const Partition& p, ClassicalType t);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All members of type t of size n.
std::vector<Partition> typed_partitions(int n, ClassicalType t);

/// Parses "4,2,1" (or "4 2 1"); empty string gives the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace orbitcalc
