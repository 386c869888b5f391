#include "mnc/partitions.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "mnc/primes.hpp"

namespace mnc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) {
        if (p < 1)
            throw DomainError("partition parts must be positive");
        n_ += p;
    }
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

PartSet PartSet::finite(std::vector<int> members)
{
    std::set<int> uniq;
    for (int m : members) {
        if (m < 1)
            throw DomainError("part set members must be positive");
        uniq.insert(m);
    }
    PartSet s(Kind::Finite);
    s.finite_.assign(uniq.begin(), uniq.end());
    return s;
}

PartSet PartSet::range(int lo, int hi)
{
    if (lo < 1 || hi < lo)
        throw DomainError("invalid part range");
    std::vector<int> m;
    for (int j = lo; j <= hi; ++j)
        m.push_back(j);
    return finite(std::move(m));
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done() { skip_ws(); return pos_ == s_.size(); }
    bool accept(std::string_view tok)
    {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok)
    {
        if (!accept(tok))
            throw ParseError("expected '" + std::string(tok) + "'", pos_);
    }
    int integer()
    {
        skip_ws();
        int v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc())
            throw ParseError("expected a positive integer", pos_);
        std::size_t start = pos_;
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        if (v < 1)
            throw ParseError("part sizes must be positive", start);
        return v;
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

PartSet PartSet::parse(std::string_view text)
{
    Cursor c(text);
    PartSet out(Kind::AllNaturals);
    if (c.accept("all"))
        out = all();
    else if (c.accept("primes"))
        out = primes();
    else if (c.accept("1+primes"))
        out = primes_plus_one();
    else if (c.accept("star"))
        out = star();
    else if (c.accept("hash"))
        out = hash();
    else if (c.accept("{")) {
        std::vector<int> m;
        if (!c.accept("}")) {
            do {
                m.push_back(c.integer());
            } while (c.accept(","));
            c.expect("}");
        }
        if (m.empty())
            throw ParseError("empty part set", c.pos());
        out = finite(std::move(m));
    } else {
        int lo = c.integer();
        c.expect("..");
        std::size_t at = c.pos();
        int hi = c.integer();
        if (hi < lo)
            throw ParseError("range upper end is below lower end", at);
        out = range(lo, hi);
    }
    if (!c.done())
        throw ParseError("unexpected trailing input", c.pos());
    return out;
}

bool PartSet::contains(int j) const
{
    if (j < 1)
        return false;
    switch (kind_) {
    case Kind::AllNaturals:
        return true;
    case Kind::Primes:
        return is_prime(j);
    case Kind::PrimesPlusOne:
        return j == 1 || is_prime(j);
    case Kind::ConjectureStar:
        return j <= 6 || j % 3 == 0;
    case Kind::ConjectureHash:
        return j <= 7 || j % 3 == 0;
    case Kind::Finite:
        return std::binary_search(finite_.begin(), finite_.end(), j);
    }
    return false;
}

std::vector<int> PartSet::members_up_to(int n) const
{
    std::vector<int> out;
    if (kind_ == Kind::Finite) {
        for (int m : finite_)
            if (m <= n)
                out.push_back(m);
        return out;
    }
    if (kind_ == Kind::Primes || kind_ == Kind::PrimesPlusOne) {
        if (kind_ == Kind::PrimesPlusOne && n >= 1)
            out.push_back(1);
        for (int p : primes_up_to(n))
            out.push_back(p);
        return out;
    }
    for (int j = 1; j <= n; ++j)
        if (contains(j))
            out.push_back(j);
    return out;
}

const std::vector<int>& PartSet::members() const
{
    if (kind_ != Kind::Finite)
        throw DomainError("part set " + to_string() + " is infinite");
    return finite_;
}

int PartSet::max_member() const
{
    return members().back();
}

std::string PartSet::to_string() const
{
    switch (kind_) {
    case Kind::AllNaturals:
        return "all";
    case Kind::Primes:
        return "primes";
    case Kind::PrimesPlusOne:
        return "1+primes";
    case Kind::ConjectureStar:
        return "star";
    case Kind::ConjectureHash:
        return "hash";
    case Kind::Finite:
        break;
    }
    bool contiguous = finite_.size() > 1 && finite_.back() - finite_.front() + 1 == static_cast<int>(finite_.size());
    if (contiguous)
        return std::to_string(finite_.front()) + ".." + std::to_string(finite_.back());
    std::string s = "{";
    for (std::size_t i = 0; i < finite_.size(); ++i)
        s += (i ? "," : "") + std::to_string(finite_[i]);
    return s + "}";
}

std::vector<Partition> enumerate_partitions(int n, const PartSet& parts, std::optional<int> max_parts)
{
    std::vector<Partition> out;
    for_each_partition(n, parts, max_parts,
                       [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); });
    return out;
}

BigInt count_partitions(int n, const PartSet& parts, std::optional<int> max_parts)
{
    if (n < 0)
        throw DomainError("partitions of a negative number");
    const std::vector<int> allowed = parts.members_up_to(n);
    const auto N = static_cast<std::size_t>(n);
    if (!max_parts) {
        std::vector<BigInt> dp(N + 1, BigInt(0));
        dp[0] = 1;
        for (int j : allowed)
            for (std::size_t m = static_cast<std::size_t>(j); m <= N; ++m)
                dp[m] += dp[m - static_cast<std::size_t>(j)];
        return dp[N];
    }
    if (*max_parts < 0)
        throw DomainError("max_parts must be non-negative");
    // dp[c][m]: partitions of m into exactly c allowed parts.
    const auto K = static_cast<std::size_t>(std::min(*max_parts, n));
    std::vector<std::vector<BigInt>> dp(K + 1, std::vector<BigInt>(N + 1, BigInt(0)));
    dp[0][0] = 1;
    for (int j : allowed) {
        const auto J = static_cast<std::size_t>(j);
        for (std::size_t c = 1; c <= K; ++c)
            for (std::size_t m = J; m <= N; ++m)
                dp[c][m] += dp[c - 1][m - J];
    }
    BigInt total = 0;
    for (std::size_t c = 0; c <= K; ++c)
        total += dp[c][N];
    return total;
}

PowerSeries partition_series(const PartSet& parts, std::size_t order)
{
    return inverse_product(parts.members_up_to(static_cast<int>(order)), order);
}

} // namespace mnc
