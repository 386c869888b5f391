#include "mnc/signatures.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "mnc/primes.hpp"

namespace mnc {

Signature::Signature(std::vector<Entry> entries)
{
    std::map<int, int> acc;
    for (auto [p, e] : entries) {
        if (e < 0)
            throw DomainError("signature exponents must be non-negative");
        acc[p] += e;
    }
    for (auto [p, e] : acc)
        if (e != 0)
            e_.emplace_back(p, e);
}

int Signature::exponent(int prime) const
{
    auto it = std::lower_bound(e_.begin(), e_.end(), Entry{prime, 0});
    return it != e_.end() && it->first == prime ? it->second : 0;
}

Signature& Signature::operator+=(const Signature& o)
{
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    auto a = e_.cbegin();
    auto b = o.e_.cbegin();
    while (a != e_.cend() || b != o.e_.cend()) {
        if (b == o.e_.cend() || (a != e_.cend() && a->first < b->first))
            out.push_back(*a++);
        else if (a == e_.cend() || b->first < a->first)
            out.push_back(*b++);
        else {
            out.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
    return *this;
}

std::string Signature::to_string() const
{
    if (e_.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i)
            os << "·";
        os << e_[i].first;
        if (e_[i].second != 1)
            os << '^' << e_[i].second;
    }
    return os.str();
}

Signature factorial_signature(int j)
{
    if (j < 0)
        throw DomainError("factorial of a negative number");
    std::vector<Signature::Entry> e;
    for (int p : primes_up_to(j))
        e.emplace_back(p, legendre_exponent(j, p));
    return Signature(std::move(e));
}

Signature signature_of(std::span<const int> parts)
{
    Signature s;
    for (int j : parts)
        s += factorial_signature(j);
    return s;
}

Signature signature_of(const Partition& p)
{
    return signature_of(std::span<const int>(p.parts()));
}

BigInt factorial(int n)
{
    if (n < 0)
        throw DomainError("factorial of a negative number");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt coefficient_value(const Partition& p)
{
    BigInt den = 1;
    for (int j : p.parts())
        den *= factorial(j);
    return factorial(p.n()) / den;
}

DenseSignatureTable::DenseSignatureTable(int n) : primes_(primes_up_to(n))
{
    if (n < 0)
        throw DomainError("negative table size");
    const std::size_t w = primes_.size();
    rows_.assign((static_cast<std::size_t>(n) + 1) * w, 0);
    for (int j = 0; j <= n; ++j)
        for (std::size_t i = 0; i < w && primes_[i] <= j; ++i)
            rows_[static_cast<std::size_t>(j) * w + i] = static_cast<std::uint16_t>(legendre_exponent(j, primes_[i]));
}

std::span<const std::uint16_t> DenseSignatureTable::factorial(int j) const
{
    const std::size_t w = primes_.size();
    return std::span<const std::uint16_t>(rows_).subspan(static_cast<std::size_t>(j) * w, w);
}

std::string DenseSignatureTable::key(std::span<const std::uint16_t> exps)
{
    std::string k(exps.size() * 2, '\0');
    for (std::size_t i = 0; i < exps.size(); ++i) {
        k[2 * i] = static_cast<char>(exps[i] & 0xff);
        k[2 * i + 1] = static_cast<char>(exps[i] >> 8);
    }
    return k;
}

std::string DenseSignatureTable::key_of(std::span<const int> parts) const
{
    std::vector<std::uint16_t> acc(width(), 0);
    for (int j : parts) {
        auto row = factorial(j);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = static_cast<std::uint16_t>(acc[i] + row[i]);
    }
    return key(acc);
}

namespace {

// Depth-first walk over partitions keeping the running exponent vector,
// so each step costs one row addition instead of a full recomputation.
struct DistinctCounter {
    const DenseSignatureTable& table;
    std::span<const int> desc;
    std::vector<std::uint16_t> acc;
    std::unordered_set<std::string> seen;

    void walk(std::size_t from, int remaining, int slots)
    {
        if (remaining == 0) {
            seen.insert(DenseSignatureTable::key(acc));
            return;
        }
        if (slots == 0)
            return;
        for (std::size_t i = from; i < desc.size(); ++i) {
            const int part = desc[i];
            if (part > remaining)
                continue;
            auto row = table.factorial(part);
            for (std::size_t k = 0; k < acc.size(); ++k)
                acc[k] = static_cast<std::uint16_t>(acc[k] + row[k]);
            walk(i, remaining - part, slots - 1);
            for (std::size_t k = 0; k < acc.size(); ++k)
                acc[k] = static_cast<std::uint16_t>(acc[k] - row[k]);
        }
    }
};

} // namespace

std::uint64_t count_distinct(int n, const PartSet& parts, std::optional<int> max_parts)
{
    if (n < 0)
        throw DomainError("count_distinct of a negative number");
    if (n > 30000)
        throw DomainError("n too large for 16-bit exponent storage");
    const int slots = max_parts ? *max_parts : n;
    if (slots < 0)
        throw DomainError("max_parts must be non-negative");
    DenseSignatureTable table(n);
    std::vector<int> desc = parts.members_up_to(n);
    std::reverse(desc.begin(), desc.end());
    DistinctCounter counter{table, desc, std::vector<std::uint16_t>(table.width(), 0), {}};
    counter.walk(0, n, slots);
    return counter.seen.size();
}

} // namespace mnc
