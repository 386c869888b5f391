#include "mnc/pairs.hpp"

#include <algorithm>
#include <unordered_map>

#include "mnc/signatures.hpp"

namespace mnc {

bool share_a_part(const Partition& a, const Partition& b)
{
    // Both part lists are sorted non-increasing.
    auto i = a.parts().begin(), j = b.parts().begin();
    while (i != a.parts().end() && j != b.parts().end()) {
        if (*i == *j)
            return true;
        if (*i > *j)
            ++i;
        else
            ++j;
    }
    return false;
}

IrreduciblePair::IrreduciblePair(Partition a, Partition b, bool allow_reducible)
{
    if (a.n() != b.n())
        throw InvariantViolation("pair sides " + a.to_string() + " and " + b.to_string() + " have different sums");
    if (signature_of(a) != signature_of(b))
        throw InvariantViolation("pair sides " + a.to_string() + " and " + b.to_string() +
                                 " give different multinomial coefficients");
    if (!allow_reducible && share_a_part(a, b))
        throw NotDisjoint("pair sides " + a.to_string() + " and " + b.to_string() + " share a part");
    if (precedes(b, a))
        std::swap(a, b);
    left_ = std::move(a);
    right_ = std::move(b);
}

bool IrreduciblePair::is_irreducible() const
{
    return !share_a_part(left_, right_);
}

std::string IrreduciblePair::to_string() const
{
    return left_.to_string() + " | " + right_.to_string();
}

namespace {

template <typename OnPair>
void scan_pairs(int n, OnPair&& on_pair)
{
    if (n < 0)
        throw DomainError("irreducible pairs of a negative number");
    DenseSignatureTable table(n);
    std::unordered_map<std::string, std::vector<std::vector<int>>> groups;
    std::vector<std::string> order;
    for_each_partition(n, PartSet::all(), std::nullopt, [&](std::span<const int> p) {
        auto [it, fresh] = groups.try_emplace(table.key_of(p));
        if (fresh)
            order.push_back(it->first);
        it->second.emplace_back(p.begin(), p.end());
    });
    for (const auto& key : order) {
        const auto& members = groups[key];
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                Partition a(members[i]), b(members[j]);
                if (!share_a_part(a, b))
                    on_pair(std::move(a), std::move(b));
            }
    }
}

} // namespace

std::vector<IrreduciblePair> irreducible_pairs(int n)
{
    std::vector<IrreduciblePair> out;
    scan_pairs(n, [&](Partition a, Partition b) { out.emplace_back(std::move(a), std::move(b)); });
    std::sort(out.begin(), out.end(), [](const IrreduciblePair& x, const IrreduciblePair& y) {
        if (x.left() != y.left())
            return precedes(x.left(), y.left());
        return precedes(x.right(), y.right());
    });
    return out;
}

std::uint64_t count_irreducible_pairs(int n)
{
    std::uint64_t count = 0;
    scan_pairs(n, [&](const Partition&, const Partition&) { ++count; });
    return count;
}

IrreduciblePair family_power(int a, int m)
{
    if (a < 2 || m < 1)
        throw DomainError("family_power needs a >= 2 and m >= 1");
    long long am = 1;
    for (int i = 0; i < m; ++i) {
        am *= a;
        if (am > 1'000'000)
            throw DomainError("a^m is too large");
    }
    std::vector<int> left{static_cast<int>(am)}, right{static_cast<int>(am - 1)};
    left.insert(left.end(), static_cast<std::size_t>(m), a - 1);
    left.insert(left.end(), static_cast<std::size_t>(m - 1), 1);
    right.insert(right.end(), static_cast<std::size_t>(m), a);
    return IrreduciblePair(Partition(std::move(left)), Partition(std::move(right)));
}

IrreduciblePair family_factorial(int j)
{
    if (j < 3)
        throw DomainError("family_factorial needs j >= 3");
    if (j > 9)
        throw DomainError("j! is too large");
    int f = 1;
    for (int i = 2; i <= j; ++i)
        f *= i;
    std::vector<int> left{f};
    left.insert(left.end(), static_cast<std::size_t>(j - 1), 1);
    return IrreduciblePair(Partition(std::move(left)), Partition({f - 1, j}));
}

IrreduciblePair combine(const IrreduciblePair& p1, const IrreduciblePair& p2, CombineMode mode)
{
    auto join = [](const Partition& x, const Partition& y) {
        std::vector<int> parts = x.parts();
        parts.insert(parts.end(), y.parts().begin(), y.parts().end());
        return Partition(std::move(parts));
    };
    return IrreduciblePair(join(p1.left(), p2.left()), join(p1.right(), p2.right()),
                           mode == CombineMode::AllowReducible);
}

std::uint64_t diophantine_lower_bound(int n)
{
    // (a, b) = (0, 0) is the empty pair, not a pair of 0
    if (n <= 0)
        return 0;
    std::uint64_t count = 0;
    for (int a = 0; 8 * a <= n; ++a)
        if ((n - 8 * a) % 7 == 0)
            ++count;
    return count;
}

IrreduciblePair family_ab(int a, int b)
{
    if (a < 0 || b < 0 || a + b == 0)
        throw DomainError("family_ab needs a, b >= 0, not both zero");
    std::vector<int> left, right;
    left.insert(left.end(), static_cast<std::size_t>(a), 6);
    left.insert(left.end(), static_cast<std::size_t>(b), 4);
    left.insert(left.end(), static_cast<std::size_t>(2 * a + 3 * b), 1);
    right.insert(right.end(), static_cast<std::size_t>(a), 5);
    right.insert(right.end(), static_cast<std::size_t>(a + b), 3);
    right.insert(right.end(), static_cast<std::size_t>(2 * b), 2);
    return IrreduciblePair(Partition(std::move(left)), Partition(std::move(right)));
}

} // namespace mnc
