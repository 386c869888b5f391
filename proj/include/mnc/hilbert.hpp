#ifndef MNC_HILBERT_HPP
#define MNC_HILBERT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnc/polynomial.hpp"
#include "mnc/series.hpp"
#include "mnc/toric.hpp"

namespace mnc {

/// numerator(q) / prod_j (1 - q^j); the denominator is kept factored.
struct RationalGF {
    IntPolynomial numerator;
    std::vector<int> denom_exponents; // ascending, may repeat

    PowerSeries expand(std::size_t order) const;
    // Expanded denominator polynomial prod_j (1 - q^j).
    IntPolynomial denominator() const;

    // "(1 - q^7)/((1-q)(1-q^2)(1-q^3)(1-q^4))"
    std::string to_string() const;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Inverse of RationalGF::to_string. Accepts a sparse polynomial numerator
/// (optionally parenthesized) and a product of (1-q^j) factors.
RationalGF parse_rational_gf(std::string_view text);

/// Minimal generators of <L> : t, i.e. of { m / gcd(m, t) : m in L }.
std::vector<toric::Monomial> colon_by_monomial(std::span<const toric::Monomial> l, const toric::Monomial& t,
                                               std::span<const int> weights);

/// Hilbert-Poincare series of k[S]/<L> by inclusion-exclusion on the
/// generators of L, memoized on canonical generator sets. The monomials must
/// live in u and use part variables only.
RationalGF hilbert_series(std::span<const toric::Monomial> l, const toric::VariableUniverse& u);

struct PipelineResult {
    toric::VariableUniverse universe;
    std::vector<toric::Binomial> groebner;    // reduced basis F of I
    std::vector<toric::Binomial> elimination; // G = F n k[S]
    std::vector<toric::Monomial> leads;       // L
    RationalGF gf;                            // M_S(q)
    toric::BuchbergerStats stats;
};

/// toric_generators -> buchberger -> eliminate -> leading_terms -> hilbert_series.
PipelineResult run_pipeline(std::span<const int> parts, std::size_t pair_budget = 2'000'000);

/// M_S(q) for finite S.
RationalGF pipeline_M(std::span<const int> parts, std::size_t pair_budget = 2'000'000);

} // namespace mnc

#endif
