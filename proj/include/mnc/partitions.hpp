#ifndef MNC_PARTITIONS_HPP
#define MNC_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnc/polynomial.hpp"
#include "mnc/series.hpp"

namespace mnc {

/// A partition of n: parts sorted non-increasing, every part >= 1.
class Partition {
public:
    Partition() = default;
    // Sorts the parts; throws DomainError on a part < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }

    // "(4,1,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Reverse-lexicographic enumeration order: a precedes b iff a's part
    // sequence is lexicographically larger.
    friend bool precedes(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// The set of allowed part sizes.
class PartSet {
public:
    enum class Kind { AllNaturals, Primes, PrimesPlusOne, Finite, ConjectureStar, ConjectureHash };

    static PartSet all() { return PartSet(Kind::AllNaturals); }
    static PartSet primes() { return PartSet(Kind::Primes); }
    static PartSet primes_plus_one() { return PartSet(Kind::PrimesPlusOne); }
    // parts <= 6 or multiples of 3
    static PartSet star() { return PartSet(Kind::ConjectureStar); }
    // parts <= 7 or multiples of 3
    static PartSet hash() { return PartSet(Kind::ConjectureHash); }
    // Distinct positive integers; duplicates are dropped, zero/negatives rejected.
    static PartSet finite(std::vector<int> members);
    static PartSet range(int lo, int hi);

    /// Parses "all", "primes", "1+primes", "lo..hi", "{a,b,c}", "star", "hash".
    static PartSet parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool contains(int j) const;
    // Members j <= n, ascending.
    std::vector<int> members_up_to(int n) const;
    // Finite sets only.
    const std::vector<int>& members() const;
    int max_member() const;

    std::string to_string() const;

    friend bool operator==(const PartSet&, const PartSet&) = default;

private:
    explicit PartSet(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<int> finite_;
};

/// Calls visit(std::span<const int> parts) for every partition of n with
/// parts in `parts` and at most max_parts parts, in reverse-lexicographic
/// order. For n == 0 the empty partition is visited once.
template <typename Visitor>
void for_each_partition(int n, const PartSet& parts, std::optional<int> max_parts, Visitor&& visit);

std::vector<Partition> enumerate_partitions(int n, const PartSet& parts, std::optional<int> max_parts = std::nullopt);

/// p_S(n), or p_{S,k}(n) (at most k parts) when max_parts is given.
BigInt count_partitions(int n, const PartSet& parts, std::optional<int> max_parts = std::nullopt);

/// P_S(q) = prod_{j in S, j <= order} (1 - q^j)^{-1}, truncated at order.
PowerSeries partition_series(const PartSet& parts, std::size_t order);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visitor>
void partition_dfs(std::span<const int> desc, std::size_t from, int remaining, int slots, std::vector<int>& stack,
                   Visitor& visit)
{
    if (remaining == 0) {
        visit(std::span<const int>(stack));
        return;
    }
    if (slots == 0)
        return;
    for (std::size_t i = from; i < desc.size(); ++i) {
        const int part = desc[i];
        if (part > remaining)
            continue;
        stack.push_back(part);
        partition_dfs(desc, i, remaining - part, slots - 1, stack, visit);
        stack.pop_back();
    }
}

} // namespace detail

template <typename Visitor>
void for_each_partition(int n, const PartSet& parts, std::optional<int> max_parts, Visitor&& visit)
{
    if (n < 0)
        throw DomainError("partitions of a negative number");
    std::vector<int> desc = parts.members_up_to(n);
    std::reverse(desc.begin(), desc.end());
    std::vector<int> stack;
    const int slots = max_parts ? *max_parts : n;
    if (slots < 0)
        throw DomainError("max_parts must be non-negative");
    detail::partition_dfs(std::span<const int>(desc), 0, n, slots, stack, visit);
}

} // namespace mnc

#endif
