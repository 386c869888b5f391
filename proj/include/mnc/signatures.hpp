#ifndef MNC_SIGNATURES_HPP
#define MNC_SIGNATURES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mnc/partitions.hpp"
#include "mnc/polynomial.hpp"

namespace mnc {

/// Prime factorization of a product of factorials, as (prime, exponent)
/// pairs sorted by prime with no zero exponents. Equal signatures mean equal
/// integers, so for a fixed upper entry n two partitions give the same
/// multinomial coefficient iff their signatures agree.
class Signature {
public:
    using Entry = std::pair<int, int>;

    Signature() = default;
    // Entries may come in any order; zero exponents are dropped, repeated primes summed.
    explicit Signature(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return e_; }
    bool empty() const noexcept { return e_.empty(); }
    int exponent(int prime) const;

    Signature& operator+=(const Signature& o);
    friend Signature operator+(Signature a, const Signature& b) { return a += b; }

    // "2^8·3^4·5^2·7"; the empty signature prints as "1".
    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<Entry> e_;
};

/// Legendre's formula for j!; j = 0 and j = 1 both give the empty signature.
Signature factorial_signature(int j);

Signature signature_of(const Partition& p);
Signature signature_of(std::span<const int> parts);

/// Number of distinct multinomial coefficients with upper entry n whose lower
/// entries are drawn from `parts` (at most max_parts of them). Streams the
/// partitions; memory grows with the number of distinct signatures only.
std::uint64_t count_distinct(int n, const PartSet& parts, std::optional<int> max_parts = std::nullopt);

/// n! / prod parts!, exact.
BigInt coefficient_value(const Partition& p);

BigInt factorial(int n);

/// Dense exponent vectors over a fixed ascending prime list, for hot loops.
class DenseSignatureTable {
public:
    // Factorial signatures of 0..n over the primes <= n.
    explicit DenseSignatureTable(int n);

    const std::vector<int>& primes() const noexcept { return primes_; }
    std::size_t width() const noexcept { return primes_.size(); }
    // Exponents of j! for j <= n.
    std::span<const std::uint16_t> factorial(int j) const;

    // Byte key of a dense exponent vector, canonical for this table.
    static std::string key(std::span<const std::uint16_t> exps);
    std::string key_of(std::span<const int> parts) const;

private:
    std::vector<int> primes_;
    std::vector<std::uint16_t> rows_;
};

} // namespace mnc

#endif
