#include "mnc/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mnc/primes.hpp"

namespace mnc {

PowerSeries::PowerSeries(std::vector<BigInt> coeffs, std::size_t order) : c_(std::move(coeffs))
{
    c_.resize(order + 1, BigInt(0));
}

PowerSeries PowerSeries::one(std::size_t order)
{
    PowerSeries s(order);
    s.c_[0] = 1;
    return s;
}

PowerSeries PowerSeries::from_polynomial(const IntPolynomial& p, std::size_t order)
{
    PowerSeries s(order);
    for (std::size_t k = 0; k < p.size() && k <= order; ++k)
        s.c_[k] = p.coeffs()[k];
    return s;
}

PowerSeries& PowerSeries::mul_one_minus(std::size_t j)
{
    if (j == 0)
        throw DomainError("factor (1 - q^0) is not allowed");
    for (std::size_t n = c_.size(); n-- > j;)
        c_[n] -= c_[n - j];
    return *this;
}

PowerSeries& PowerSeries::div_one_minus(std::size_t j)
{
    if (j == 0)
        throw DomainError("factor (1 - q^0) is not invertible");
    for (std::size_t n = j; n < c_.size(); ++n)
        c_[n] += c_[n - j];
    return *this;
}

std::string PowerSeries::to_string() const
{
    return IntPolynomial(c_).to_string();
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s)
{
    return os << s.to_string();
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b)
{
    if (a.order() != b.order())
        throw DomainError("power series orders differ");
    const std::size_t N = a.order();
    PowerSeries c(N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= N; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b)
{
    if (a.order() != b.order())
        throw DomainError("power series orders differ");
    const BigInt& b0 = b[0];
    if (b0 != 1 && b0 != -1)
        throw DomainError("divisor constant term is not a unit");
    const std::size_t N = a.order();
    PowerSeries c(N);
    for (std::size_t n = 0; n <= N; ++n) {
        BigInt acc = a[n];
        for (std::size_t k = 1; k <= n; ++k)
            if (b[k] != 0)
                acc -= b[k] * c[n - k];
        c[n] = b0 == 1 ? acc : BigInt(-acc);
    }
    return c;
}

PowerSeries inverse_product(std::span<const int> exponents, std::size_t order)
{
    PowerSeries s = PowerSeries::one(order);
    for (int j : exponents) {
        if (j <= 0)
            throw DomainError("denominator exponents must be positive");
        if (static_cast<std::size_t>(j) <= order)
            s.div_one_minus(static_cast<std::size_t>(j));
    }
    return s;
}

namespace {

BigInt coefficient_over_product(int n, const IntPolynomial& numerator, const std::vector<int>& exponents)
{
    if (n < 0)
        return 0;
    const auto N = static_cast<std::size_t>(n);
    PowerSeries s = PowerSeries::from_polynomial(numerator, N);
    for (int j : exponents)
        if (j <= n)
            s.div_one_minus(static_cast<std::size_t>(j));
    return s[N];
}

} // namespace

BigInt upper_bound(int n, std::span<const int> s_prime, const IntPolynomial& numerator)
{
    if (s_prime.empty())
        throw DomainError("upper_bound needs a nonempty finite S'");
    std::vector<int> all;
    for (int j = 1; j <= n; ++j)
        all.push_back(j);
    return coefficient_over_product(n, numerator, all);
}

BigInt lower_bound(int n, std::span<const int> s, const IntPolynomial& numerator)
{
    if (s.empty())
        throw DomainError("lower_bound needs a nonempty finite S");
    const int top = *std::max_element(s.begin(), s.end());
    std::vector<int> primes;
    for (int p : primes_up_to(std::max(n, 0)))
        if (p > top)
            primes.push_back(p);
    return lower_bound(n, s, primes, numerator);
}

BigInt lower_bound(int n, std::span<const int> s, std::span<const int> primes, const IntPolynomial& numerator)
{
    if (s.empty())
        throw DomainError("lower_bound needs a nonempty finite S");
    const int top = *std::max_element(s.begin(), s.end());
    std::set<int> seen(s.begin(), s.end());
    if (seen.size() != s.size())
        throw DomainError("S lists a part twice");
    for (int p : primes) {
        if (!is_prime(p))
            throw DomainError("P contains the non-prime " + std::to_string(p));
        if (p <= top)
            throw DomainError("prime " + std::to_string(p) + " is not larger than max S; its factor would be counted twice");
        if (!seen.insert(p).second)
            throw DomainError("P lists the prime " + std::to_string(p) + " twice");
    }
    return coefficient_over_product(n, numerator, std::vector<int>(seen.begin(), seen.end()));
}

PowerSeries prime_union_series(bool include_one, std::size_t order)
{
    std::vector<int> exps = primes_up_to(static_cast<int>(order));
    if (include_one)
        exps.insert(exps.begin(), 1);
    return inverse_product(exps, order);
}

void write_csv(std::ostream& os, std::span<const std::string> names, std::span<const PowerSeries> columns)
{
    if (names.size() != columns.size())
        throw DomainError("column names and series differ in count");
    os << 'n';
    for (const auto& name : names)
        os << ',' << name;
    os << '\n';
    std::size_t N = 0;
    if (!columns.empty()) {
        N = columns.front().order();
        for (const auto& c : columns)
            N = std::min(N, c.order());
    }
    for (std::size_t n = 0; !columns.empty() && n <= N; ++n) {
        os << n;
        for (const auto& c : columns)
            os << ',' << c[n];
        os << '\n';
    }
}

} // namespace mnc
