#include "mnc/quasipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mnc {

RationalPolynomial cyclotomic(int d)
{
    if (d < 1)
        throw DomainError("cyclotomic index must be positive");
    RationalPolynomial c = RationalPolynomial::monomial(Rational(1), static_cast<std::size_t>(d)) -
                           RationalPolynomial::constant(Rational(1));
    for (int e = 1; e < d; ++e)
        if (d % e == 0)
            c = exact_div(c, cyclotomic(e));
    return c;
}

RationalPolynomial PartialFractionDecomposition::recombine(const RationalPolynomial& denominator) const
{
    RationalPolynomial sum = polynomial_part * denominator;
    for (const auto& t : terms)
        sum += t.numerator * exact_div(denominator, cyclotomic(t.index).pow(static_cast<unsigned>(t.power)));
    return sum;
}

PartialFractionDecomposition partial_fractions(const RationalGF& g)
{
    const RationalPolynomial f = to_rational(g.numerator);
    const RationalPolynomial den = to_rational(g.denominator());
    auto [poly, rem] = divmod(f, den);

    std::map<int, int> mult;
    for (int j : g.denom_exponents)
        for (int d = 1; d <= j; ++d)
            if (j % d == 0)
                ++mult[d];

    PartialFractionDecomposition out;
    out.polynomial_part = std::move(poly);
    for (auto [d, e] : mult) {
        const RationalPolynomial c = cyclotomic(d);
        const RationalPolynomial block = c.pow(static_cast<unsigned>(e));
        const RationalPolynomial cofactor = exact_div(den, block);
        // rem/den = sum_d B_d / C_d^{e_d} with B_d = rem * cofactor^{-1} mod C_d^{e_d}.
        RationalPolynomial b = divmod(rem * inverse_mod(cofactor, block), block).second;
        for (int k = e; k >= 1; --k) {
            auto [q, a] = divmod(b, c);
            if (!a.is_zero())
                out.terms.push_back(PartialFraction{d, k, std::move(a)});
            b = std::move(q);
        }
        if (!b.is_zero())
            throw InvariantViolation("cyclotomic expansion left a remainder");
    }
    return out;
}

Quasipolynomial::Quasipolynomial(std::vector<std::vector<Rational>> table, std::size_t valid_from)
    : table_(std::move(table)), n0_(valid_from)
{
    if (table_.empty())
        throw DomainError("quasipolynomial needs a positive period");
    for (auto& row : table_) {
        while (!row.empty() && row.back() == 0)
            row.pop_back();
        degree_ = std::max(degree_, static_cast<int>(row.size()) - 1);
    }
}

Rational Quasipolynomial::coeff(std::size_t k, std::size_t residue) const
{
    const auto& row = table_.at(residue % table_.size());
    return k < row.size() ? row[k] : Rational(0);
}

namespace {

std::string rational_string(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string power_string(std::size_t k)
{
    if (k == 0)
        return "";
    return k == 1 ? " n" : " n^" + std::to_string(k);
}

// Smallest p dividing row.size() with row[r] == row[r % p].
template <typename T>
std::size_t minimal_period(const std::vector<T>& row)
{
    const std::size_t m = row.size();
    for (std::size_t p = 1; p < m; ++p) {
        if (m % p != 0)
            continue;
        bool ok = true;
        for (std::size_t r = p; r < m && ok; ++r)
            ok = row[r] == row[r % p];
        if (ok)
            return p;
    }
    return m;
}

} // namespace

std::string Quasipolynomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = degree_; k >= 0; --k) {
        std::vector<Rational> row;
        for (std::size_t r = 0; r < period(); ++r)
            row.push_back(coeff(static_cast<std::size_t>(k), r));
        if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; }))
            continue;
        const std::size_t p = minimal_period(row);
        if (p == 1) {
            Rational v = row[0];
            if (!first)
                os << (v < 0 ? " - " : " + ");
            else if (v < 0)
                os << '-';
            if (v < 0)
                v = -v;
            if (v != 1 || k == 0)
                os << rational_string(v);
            os << (v == 1 && k > 0 ? power_string(static_cast<std::size_t>(k)).substr(1)
                                   : power_string(static_cast<std::size_t>(k)));
        } else {
            if (!first)
                os << " + ";
            os << '[';
            for (std::size_t r = 0; r < p; ++r)
                os << (r ? ", " : "") << rational_string(row[r]);
            os << "](n)" << power_string(static_cast<std::size_t>(k));
        }
        first = false;
    }
    return first ? "0" : os.str();
}

Quasipolynomial to_quasipolynomial(const RationalGF& g)
{
    const PartialFractionDecomposition pf = partial_fractions(g);
    const std::size_t n0 = pf.polynomial_part.is_zero() ? 0 : static_cast<std::size_t>(pf.polynomial_part.degree()) + 1;

    std::size_t m = 1;
    for (const auto& t : pf.terms)
        m = std::lcm(m, static_cast<std::size_t>(t.index));

    std::vector<RationalPolynomial> per_residue(m);
    for (const auto& t : pf.terms) {
        const auto d = static_cast<std::size_t>(t.index);
        const auto k = static_cast<unsigned>(t.power);
        // A / C_d^k = (-1)^k A Q^k / (1 - q^d)^k with Q = (q^d - 1) / C_d.
        const RationalPolynomial qd = RationalPolynomial::monomial(Rational(1), d) - RationalPolynomial::constant(Rational(1));
        RationalPolynomial numer = t.numerator * exact_div(qd, cyclotomic(t.index)).pow(k);
        if (k % 2 == 1)
            numer = -numer;
        Rational fact = 1;
        for (unsigned i = 2; i < k; ++i)
            fact *= i;
        for (std::size_t s = 0; s < numer.size(); ++s) {
            const Rational c = numer[s];
            if (c == 0)
                continue;
            // [q^n] q^s / (1 - q^d)^k = binom((n - s)/d + k - 1, k - 1) for n = s (mod d),
            // a polynomial in n that vanishes at the skipped n < s.
            RationalPolynomial term = RationalPolynomial::constant(c / fact);
            for (unsigned i = 1; i < k; ++i)
                term *= RationalPolynomial{Rational(-static_cast<long>(s)) / d + i, Rational(1) / d};
            for (std::size_t r = s % d; r < m; r += d)
                per_residue[r] += term;
        }
    }

    std::vector<std::vector<Rational>> table(m);
    for (std::size_t r = 0; r < m; ++r)
        table[r] = per_residue[r].coeffs();
    // Shrink to the minimal period of the whole table.
    std::size_t width = 0;
    for (const auto& row : table)
        width = std::max(width, row.size());
    for (auto& row : table)
        row.resize(width, Rational(0));
    table.resize(minimal_period(table));
    return Quasipolynomial(std::move(table), n0);
}

BigInt evaluate(const Quasipolynomial& qp, std::size_t n)
{
    if (n < qp.valid_from())
        throw BelowThreshold("n = " + std::to_string(n) + " is below the validity threshold " +
                             std::to_string(qp.valid_from()));
    Rational value = 0, power = 1;
    const Rational x(static_cast<long long>(n));
    for (int k = 0; k <= qp.degree(); ++k) {
        value += qp.coeff(static_cast<std::size_t>(k), n) * power;
        power *= x;
    }
    if (denominator(value) != 1)
        throw NonIntegralValue("quasipolynomial value at n = " + std::to_string(n) + " is not an integer");
    return numerator(value);
}

} // namespace mnc
