#ifndef MNC_PAIRS_HPP
#define MNC_PAIRS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mnc/partitions.hpp"

namespace mnc {

/// Two partitions of the same n giving the same multinomial coefficient.
/// Stored with left preceding right in reverse-lexicographic order, so the
/// pair is unordered-unique.
class IrreduciblePair {
public:
    // Orients the pair and checks the invariants: equal sums, equal
    // signatures, and (unless allow_reducible) no shared part value.
    // Throws InvariantViolation / NotDisjoint.
    IrreduciblePair(Partition a, Partition b, bool allow_reducible = false);

    const Partition& left() const noexcept { return left_; }
    const Partition& right() const noexcept { return right_; }
    int n() const noexcept { return left_.n(); }
    bool is_irreducible() const;

    // "(6,1,1) | (5,3)"
    std::string to_string() const;

    friend bool operator==(const IrreduciblePair&, const IrreduciblePair&) = default;

private:
    Partition left_;
    Partition right_;
};

bool share_a_part(const Partition& a, const Partition& b);

/// All irreducible pairs of partitions of n, sorted by left then right in
/// enumeration order. Partitions are grouped by signature first, so only
/// partitions with equal coefficients are compared.
std::vector<IrreduciblePair> irreducible_pairs(int n);

/// i(n) without materializing the pairs.
std::uint64_t count_irreducible_pairs(int n);

/// (a^m, (a-1) x m, 1 x (m-1)) and (a^m - 1, a x m), a partition pair of
/// a^m + am - 1. Degenerate (a, m), where the two sides share a part value,
/// are rejected with NotDisjoint.
IrreduciblePair family_power(int a, int m);

/// (j!, 1 x (j-1)) and (j! - 1, j) for j >= 3.
IrreduciblePair family_factorial(int j);

enum class CombineMode { RequireIrreducible, AllowReducible };

/// Componentwise multiset union of two pairs. With RequireIrreducible the
/// union must stay part-disjoint, otherwise NotDisjoint.
IrreduciblePair combine(const IrreduciblePair& p1, const IrreduciblePair& p2,
                        CombineMode mode = CombineMode::RequireIrreducible);

/// Number of non-negative (a, b), not both zero, with 8a + 7b = n. Each yields the
/// irreducible pair built from a copies of (6,1,1)|(5,3) and b copies of
/// (4,1,1,1)|(3,2,2), so this is a lower bound for i(n).
std::uint64_t diophantine_lower_bound(int n);

/// The pair of partitions of 8a + 7b obtained from that combination.
IrreduciblePair family_ab(int a, int b);

} // namespace mnc

#endif
