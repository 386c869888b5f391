#ifndef MNC_SERIES_HPP
#define MNC_SERIES_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mnc/polynomial.hpp"

namespace mnc {

/// Formal power series in q with exact integer coefficients, truncated
/// after q^order. Coefficients of q^{>order} are unknown and never read.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order + 1, BigInt(0)) {}
    PowerSeries(std::vector<BigInt> coeffs, std::size_t order);

    static PowerSeries one(std::size_t order);
    static PowerSeries from_polynomial(const IntPolynomial& p, std::size_t order);

    std::size_t order() const noexcept { return c_.size() - 1; }
    const BigInt& operator[](std::size_t n) const { return c_.at(n); }
    BigInt& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    // In-place multiplication / division by (1 - q^j).
    PowerSeries& mul_one_minus(std::size_t j);
    PowerSeries& div_one_minus(std::size_t j);

    // Nonzero terms only, ascending: "1 - q^7 - q^8 + q^12".
    std::string to_string() const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

/// Cauchy product truncated at the common order.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// c with mul(c, b) == a up to the common order. The constant term of b
/// must be a unit (+1 or -1); otherwise DomainError.
PowerSeries div(const PowerSeries& a, const PowerSeries& b);

/// 1 / prod_j (1 - q^j) truncated at order; exponents above order are skipped.
PowerSeries inverse_product(std::span<const int> exponents, std::size_t order);

/// [q^n] numerator / prod_{j=1..n} (1 - q^j). With numerator f_{S'} this is
/// the upper bound U_{N+,S'}(n) for M(n). s_prime only documents which finite
/// set the numerator belongs to and must be nonempty.
BigInt upper_bound(int n, std::span<const int> s_prime, const IntPolynomial& numerator);

/// [q^n] numerator / prod_{j in S u P, j<=n} (1 - q^j) where P is the set of
/// primes greater than max S. With numerator f_S this is L_S(n) = M_{S u P}(n).
BigInt lower_bound(int n, std::span<const int> s, const IntPolynomial& numerator);

/// Same with an explicit prime set P. Throws DomainError unless every
/// element of P is a prime larger than max S and no element is repeated.
BigInt lower_bound(int n, std::span<const int> s, std::span<const int> primes, const IntPolynomial& numerator);

/// Series of M_{{1} u P}(n) = 1/((1-q) prod_{p prime <= order}(1-q^p)) when
/// include_one is set, otherwise the prime-partition series P_P(q).
PowerSeries prime_union_series(bool include_one, std::size_t order);

/// Writes "n,<name0>,<name1>,..." followed by one row per exponent.
void write_csv(std::ostream& os, std::span<const std::string> names, std::span<const PowerSeries> columns);

} // namespace mnc

#endif
