#ifndef MNC_POLYNOMIAL_HPP
#define MNC_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mnc/errors.hpp"

namespace mnc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in q with coefficients of type Scalar,
/// stored in ascending order of exponent. The zero polynomial has no
/// coefficients; otherwise the top coefficient is nonzero.
template <typename Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Scalar& s) { return Polynomial(std::vector<Scalar>{s}); }

    // s * q^k
    static Polynomial monomial(const Scalar& s, std::size_t k)
    {
        std::vector<Scalar> c(k + 1, Scalar(0));
        c[k] = s;
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    Scalar operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const Scalar& leading() const { return c_.back(); }

    template <typename T>
    T evaluate(const T& x) const
    {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Scalar& s)
    {
        for (auto& x : c_)
            x *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Multiply by q^k.
    Polynomial shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<Scalar> c(k, Scalar(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Polynomial(std::move(c));
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial r = constant(Scalar(1));
        for (unsigned i = 0; i < e; ++i)
            r *= *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Sparse rendering in ascending exponents, e.g. "1 - q^7 + 2 q^9".
    std::string to_string(const std::string& var = "q") const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            Scalar v = c_[k];
            if (v == 0)
                continue;
            bool neg = v < 0;
            if (neg)
                v = -v;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (k == 0) {
                os << v;
                continue;
            }
            if (v != 1)
                os << v << ' ';
            os << var;
            if (k > 1)
                os << '^' << k;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

/// Quotient and remainder over a field. Throws DomainError on division by zero.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs();
    if (a.degree() < b.degree())
        return {Polynomial<Scalar>{}, a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Scalar> quo(rem.size() - db, Scalar(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        Scalar f = rem[k + db] / b.leading();
        quo[k] = f;
        if (f == 0)
            continue;
        for (std::size_t i = 0; i <= db; ++i)
            rem[k + i] -= f * b.coeffs()[i];
    }
    rem.resize(db);
    return {Polynomial<Scalar>(std::move(quo)), Polynomial<Scalar>(std::move(rem))};
}

/// Exact division; throws InvariantViolation when the remainder is nonzero.
template <typename Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InvariantViolation("inexact polynomial division");
    return q;
}

/// Inverse of a modulo m (coprime), over a field, via the extended Euclidean algorithm.
template <typename Scalar>
Polynomial<Scalar> inverse_mod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& m)
{
    using P = Polynomial<Scalar>;
    P r0 = m, r1 = divmod(a, m).second;
    P s0, s1 = P::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        P s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        throw DomainError("polynomials are not coprime");
    return divmod(s0 * P::constant(Scalar(1) / r0.leading()), m).second;
}

inline RationalPolynomial to_rational(const IntPolynomial& p)
{
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs())
        c.emplace_back(x);
    return RationalPolynomial(std::move(c));
}

} // namespace mnc

#endif
