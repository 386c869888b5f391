#ifndef MNC_TORIC_HPP
#define MNC_TORIC_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mnc/errors.hpp"

namespace mnc::toric {

/// Variables of k[S, q, x]: the prime variables x_p (p <= max S), the
/// homogenizing variable q and the part variables q_j (j in S).
///
/// Variable indices follow the elimination term order from largest to
/// smallest: x_{p_max}, ..., x_2, q, q_{j_max}, ..., q_{j_min}. Lexicographic
/// comparison of exponent vectors in index order is therefore the term order,
/// and every monomial involving an x or q variable is larger than every
/// monomial in the q_j alone. Weights: deg x_p = 0, deg q = 1, deg q_j = j.
class VariableUniverse {
public:
    explicit VariableUniverse(std::vector<int> parts);

    std::size_t size() const noexcept { return weights_.size(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    const std::vector<int>& primes() const noexcept { return primes_; }
    std::span<const int> weights() const noexcept { return weights_; }

    std::size_t x_index(int prime) const;
    std::size_t t_index() const noexcept { return primes_.size(); }
    std::size_t q_index(int part) const;
    // First index of the part-variable block.
    std::size_t q_block() const noexcept { return primes_.size() + 1; }
    // Part value carried by index i (i must lie in the part block).
    int part_at(std::size_t i) const;

    // "x_3", "q", "q_4"
    std::string name(std::size_t i) const;

private:
    std::vector<int> parts_;  // ascending
    std::vector<int> primes_; // ascending
    std::vector<int> weights_;
};

/// Power product over a VariableUniverse: dense exponents plus the cached
/// weighted degree.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<int> exps, std::span<const int> weights);

    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0), 0); }

    const std::vector<int>& exps() const noexcept { return e_; }
    int operator[](std::size_t i) const { return e_[i]; }
    std::size_t size() const noexcept { return e_.size(); }
    long degree() const noexcept { return deg_; }
    bool is_one() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    Monomial(std::vector<int> exps, long deg) : e_(std::move(exps)), deg_(deg) {}

    friend Monomial operator*(const Monomial&, const Monomial&);
    friend Monomial operator/(const Monomial&, const Monomial&);
    friend Monomial gcd(const Monomial&, const Monomial&, std::span<const int>);
    friend Monomial lcm(const Monomial&, const Monomial&, std::span<const int>);

    std::vector<int> e_;
    long deg_ = 0;
};

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires divides(b, a).
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights);
Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);
bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Lexicographic elimination order; negative, zero or positive.
int compare(const Monomial& a, const Monomial& b);
inline bool term_less(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

/// True when the monomial uses only part variables q_j.
bool in_part_ring(const Monomial& m, const VariableUniverse& u);

/// lead - trail with lead > trail in the term order.
struct Binomial {
    Monomial lead;
    Monomial trail;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Orients a - b; nullopt when a == b (the zero polynomial).
std::optional<Binomial> make_binomial(Monomial a, Monomial b);

std::string to_string(const Monomial& m, const VariableUniverse& u);
std::string to_string(const Binomial& b, const VariableUniverse& u);

/// The generators q_j - h(q_j), h(q_j) = q^j prod_p x_p^{e_p(j!)}.
std::vector<Binomial> toric_generators(const VariableUniverse& u);

/// S-polynomial of two pure-difference binomials; nullopt when it vanishes.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, std::span<const int> weights);

/// Fully reduced normal form of a monomial modulo the basis leads.
Monomial normal_form(Monomial m, std::span<const Binomial> basis);

/// Fully reduced normal form of b; nullopt when b reduces to zero.
std::optional<Binomial> normal_form(const Binomial& b, std::span<const Binomial> basis);

struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t product_criterion = 0;
    std::size_t chain_criterion = 0;
    std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis of the ideal generated by gens under the
/// elimination order, sorted ascending by lead. Pairs are processed lowest
/// weighted lcm degree first. Throws BudgetExceeded after pair_budget pairs.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, std::span<const int> weights,
                                 std::size_t pair_budget = 2'000'000, BuchbergerStats* stats = nullptr);

/// F intersected with k[S]: the elements free of x and q variables.
std::vector<Binomial> eliminate(std::span<const Binomial> basis, const VariableUniverse& u);

/// Minimal generators of the ideal spanned by the leads of G.
std::vector<Monomial> leading_terms(std::span<const Binomial> g);

/// Divisibility-reduced, deduplicated and sorted copy of a monomial list.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

} // namespace mnc::toric

#endif
