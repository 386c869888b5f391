#include "mnc/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mnc {

using toric::Monomial;

PowerSeries RationalGF::expand(std::size_t order) const
{
    PowerSeries s = PowerSeries::from_polynomial(numerator, order);
    for (int j : denom_exponents)
        if (static_cast<std::size_t>(j) <= order)
            s.div_one_minus(static_cast<std::size_t>(j));
    return s;
}

IntPolynomial RationalGF::denominator() const
{
    IntPolynomial d = IntPolynomial::constant(1);
    for (int j : denom_exponents)
        d *= IntPolynomial::constant(1) - IntPolynomial::monomial(1, static_cast<std::size_t>(j));
    return d;
}

std::string RationalGF::to_string() const
{
    std::string num = numerator.to_string();
    bool compound = numerator.coeffs().size() > 1 &&
                    std::count_if(numerator.coeffs().begin(), numerator.coeffs().end(),
                                  [](const BigInt& c) { return c != 0; }) > 1;
    if (compound)
        num = "(" + num + ")";
    if (denom_exponents.empty())
        return num;
    std::string den;
    for (int j : denom_exponents)
        den += j == 1 ? std::string("(1-q)") : "(1-q^" + std::to_string(j) + ")";
    if (denom_exponents.size() > 1)
        den = "(" + den + ")";
    return num + "/" + den;
}

namespace {

class GfParser {
public:
    explicit GfParser(std::string_view s) : s_(s) {}

    RationalGF parse()
    {
        RationalGF g;
        skip();
        if (peek() == '(' ) {
            ++pos_;
            g.numerator = polynomial();
            expect(')');
        } else {
            g.numerator = polynomial();
        }
        skip();
        if (pos_ < s_.size()) {
            expect('/');
            skip();
            bool wrapped = peek() == '(' && next_nonspace(pos_ + 1) == '(';
            if (wrapped)
                ++pos_;
            do {
                g.denom_exponents.push_back(factor());
                skip();
            } while (wrapped && peek() == '(');
            if (wrapped)
                expect(')');
        }
        skip();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input", pos_);
        std::sort(g.denom_exponents.begin(), g.denom_exponents.end());
        return g;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char next_nonspace(std::size_t p) const
    {
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p])))
            ++p;
        return p < s_.size() ? s_[p] : '\0';
    }
    void expect(char c)
    {
        skip();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    BigInt integer()
    {
        skip();
        if (!digit())
            throw ParseError("expected a number", pos_);
        std::size_t start = pos_;
        while (digit())
            ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }
    // [coef] [q[^k]]
    std::pair<BigInt, std::size_t> term()
    {
        skip();
        BigInt coef = 1;
        bool have_coef = false;
        if (digit()) {
            coef = integer();
            have_coef = true;
            skip();
        }
        std::size_t k = 0;
        if (peek() == 'q') {
            ++pos_;
            k = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                k = static_cast<std::size_t>(integer());
            }
        } else if (!have_coef) {
            throw ParseError("expected a term", pos_);
        }
        return {coef, k};
    }
    IntPolynomial polynomial()
    {
        IntPolynomial p;
        skip();
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            auto [c, k] = term();
            p += IntPolynomial::monomial(sign * c, k);
            skip();
            if (peek() == '+')
                sign = 1;
            else if (peek() == '-')
                sign = -1;
            else
                break;
            ++pos_;
        }
        return p;
    }
    int factor()
    {
        expect('(');
        skip();
        if (integer() != 1)
            throw ParseError("denominator factors must read (1-q^j)", pos_);
        expect('-');
        skip();
        if (peek() != 'q')
            throw ParseError("expected 'q'", pos_);
        ++pos_;
        int j = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            j = static_cast<int>(integer());
        }
        if (j < 1)
            throw ParseError("exponent must be positive", pos_);
        expect(')');
        return j;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

using Key = std::vector<std::vector<int>>;

class HilbertNumerator {
public:
    explicit HilbertNumerator(std::span<const int> weights) : w_(weights) {}

    // gens must be minimal and sorted.
    IntPolynomial operator()(const std::vector<Monomial>& gens)
    {
        if (gens.empty())
            return IntPolynomial::constant(1);
        if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); }))
            return {};
        Key key;
        for (const auto& m : gens)
            key.push_back(m.exps());
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        IntPolynomial result;
        if (pairwise_coprime(gens)) {
            result = IntPolynomial::constant(1);
            for (const auto& m : gens)
                result *= IntPolynomial::constant(1) - IntPolynomial::monomial(1, static_cast<std::size_t>(m.degree()));
        } else {
            const std::size_t pivot = choose_pivot(gens);
            const Monomial& t = gens[pivot];
            std::vector<Monomial> rest;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != pivot)
                    rest.push_back(gens[i]);
            auto colon = colon_by_monomial(rest, t, w_);
            result = (*this)(rest) - (*this)(colon).shifted(static_cast<std::size_t>(t.degree()));
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    static bool pairwise_coprime(const std::vector<Monomial>& g)
    {
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (!toric::coprime(g[i], g[j]))
                    return false;
        return true;
    }

    // Generator sharing variables with the most others; ties go to the last.
    static std::size_t choose_pivot(const std::vector<Monomial>& g)
    {
        std::size_t best = 0;
        int best_score = -1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            int score = 0;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (i != j && !toric::coprime(g[i], g[j]))
                    ++score;
            if (score >= best_score) {
                best_score = score;
                best = i;
            }
        }
        return best;
    }

    std::span<const int> w_;
    std::map<Key, IntPolynomial> memo_;
};

} // namespace

RationalGF parse_rational_gf(std::string_view text)
{
    return GfParser(text).parse();
}

std::vector<Monomial> colon_by_monomial(std::span<const Monomial> l, const Monomial& t, std::span<const int> weights)
{
    std::vector<Monomial> out;
    out.reserve(l.size());
    for (const auto& m : l)
        out.push_back(m / toric::gcd(m, t, weights));
    return toric::minimalize(std::move(out));
}

RationalGF hilbert_series(std::span<const Monomial> l, const toric::VariableUniverse& u)
{
    for (const auto& m : l) {
        if (m.size() != u.size())
            throw DomainError("monomial does not belong to the variable universe");
        if (!toric::in_part_ring(m, u))
            throw DomainError("hilbert_series needs monomials in the part variables only");
    }
    HilbertNumerator numer(u.weights());
    RationalGF g;
    g.numerator = numer(toric::minimalize(std::vector<Monomial>(l.begin(), l.end())));
    g.denom_exponents = u.parts();
    return g;
}

PipelineResult run_pipeline(std::span<const int> parts, std::size_t pair_budget)
{
    toric::VariableUniverse u(std::vector<int>(parts.begin(), parts.end()));
    toric::BuchbergerStats stats;
    auto f = toric::buchberger(toric::toric_generators(u), u.weights(), pair_budget, &stats);
    auto g = toric::eliminate(f, u);
    auto l = toric::leading_terms(g);
    auto gf = hilbert_series(l, u);
    return PipelineResult{std::move(u), std::move(f), std::move(g), std::move(l), std::move(gf), stats};
}

RationalGF pipeline_M(std::span<const int> parts, std::size_t pair_budget)
{
    return run_pipeline(parts, pair_budget).gf;
}

} // namespace mnc
