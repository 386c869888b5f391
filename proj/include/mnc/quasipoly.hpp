#ifndef MNC_QUASIPOLY_HPP
#define MNC_QUASIPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mnc/hilbert.hpp"
#include "mnc/polynomial.hpp"

namespace mnc {

/// C_d(q), monic, via C_d = (q^d - 1) / prod_{e | d, e < d} C_e.
RationalPolynomial cyclotomic(int d);

/// numerator(q) / C_index(q)^power with deg numerator < deg C_index.
struct PartialFraction {
    int index;
    int power;
    RationalPolynomial numerator;

    friend bool operator==(const PartialFraction&, const PartialFraction&) = default;
};

struct PartialFractionDecomposition {
    RationalPolynomial polynomial_part; // nonzero only when deg f >= deg of denominator
    std::vector<PartialFraction> terms; // by index ascending, then power descending

    // polynomial_part * D + sum numerator * D / C^power, with D the expanded denominator.
    RationalPolynomial recombine(const RationalPolynomial& denominator) const;
};

/// Exact partial fractions of g over powers of cyclotomic polynomials.
PartialFractionDecomposition partial_fractions(const RationalGF& g);

/// value(n) = sum_k coeff(k, n mod period) n^k for n >= valid_from.
class Quasipolynomial {
public:
    Quasipolynomial(std::vector<std::vector<Rational>> table, std::size_t valid_from);

    std::size_t period() const noexcept { return table_.size(); }
    // Highest k with a nonzero coefficient in some residue class; -1 if identically zero.
    int degree() const noexcept { return degree_; }
    std::size_t valid_from() const noexcept { return n0_; }
    // Coefficient of n^k for n = residue (mod period).
    Rational coeff(std::size_t k, std::size_t residue) const;
    const std::vector<std::vector<Rational>>& table() const noexcept { return table_; }

    // Bracket notation: "7/48 n^2 + [1/2, 3/8](n) n + [...](n)" where
    // [a_0, ..., a_{m-1}](n) = a_r for n = r (mod m).
    std::string to_string() const;

private:
    std::vector<std::vector<Rational>> table_; // table_[residue][k]
    std::size_t n0_;
    int degree_ = -1;
};

/// Closed form of the coefficient sequence of g. Each term A/C_d^k is
/// rewritten over (1 - q^d)^k and expanded with the binomial series. The
/// period is reduced to the smallest one consistent with the table.
Quasipolynomial to_quasipolynomial(const RationalGF& g);

/// Exact value; BelowThreshold for n < valid_from, NonIntegralValue if the
/// result is not an integer.
BigInt evaluate(const Quasipolynomial& qp, std::size_t n);

} // namespace mnc

#endif
