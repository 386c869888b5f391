#include <doctest.h>

#include <algorithm>
#include <set>

#include "mnc/pairs.hpp"
#include "mnc/signatures.hpp"
#include "oracles.hpp"

using namespace mnc;

namespace {

// Unordered disjoint pairs with equal n!/prod(parts!), from the integers themselves.
std::size_t oracle_pairs(int n)
{
    auto ps = oracle::partitions(n, [](int) { return true; });
    std::vector<oracle::cpp_int> den;
    for (const auto& p : ps) {
        oracle::cpp_int d = 1;
        for (int j : p)
            d *= oracle::factorial(j);
        den.push_back(d);
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (den[i] != den[j])
                continue;
            std::set<int> a(ps[i].begin(), ps[i].end());
            bool shared = false;
            for (int x : ps[j])
                shared = shared || a.count(x);
            if (!shared)
                ++count;
        }
    return count;
}

} // namespace

TEST_CASE("the smallest irreducible pair")
{
    auto p7 = irreducible_pairs(7);
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].left() == Partition({4, 1, 1, 1}));
    CHECK(p7[0].right() == Partition({3, 2, 2}));
    CHECK(p7[0].to_string() == "(4,1,1,1) | (3,2,2)");
    CHECK(p7[0].is_irreducible());
}

TEST_CASE("values of n without irreducible pairs")
{
    for (int n : {0, 1, 2, 3, 4, 5, 6, 9, 11, 12}) {
        CHECK(count_irreducible_pairs(n) == 0);
        CHECK(irreducible_pairs(n).empty());
    }
    for (int n = 13; n <= 30; ++n)
        CHECK(count_irreducible_pairs(n) > 0);
    for (int n : {7, 8, 10})
        CHECK(count_irreducible_pairs(n) > 0);
}

TEST_CASE("pairs of 8")
{
    const IrreduciblePair want(Partition({6, 1, 1}), Partition({5, 3}));
    auto p8 = irreducible_pairs(8);
    CHECK(std::find(p8.begin(), p8.end(), want) != p8.end());
}

TEST_CASE("pair counts agree with brute force")
{
    for (int n = 0; n <= 20; ++n)
        CHECK(count_irreducible_pairs(n) == oracle_pairs(n));
}

TEST_CASE("listed pairs are canonical and unique")
{
    for (int n = 7; n <= 26; ++n) {
        auto ps = irreducible_pairs(n);
        CHECK(ps.size() == count_irreducible_pairs(n));
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& p : ps) {
            CHECK(precedes(p.left(), p.right()));
            CHECK(p.n() == n);
            CHECK(signature_of(p.left()) == signature_of(p.right()));
            CHECK_FALSE(share_a_part(p.left(), p.right()));
            CHECK(seen.emplace(p.left().parts(), p.right().parts()).second);
            CHECK(seen.count({p.right().parts(), p.left().parts()}) == 0);
        }
    }
}

TEST_CASE("pair construction validates")
{
    IrreduciblePair flipped(Partition({3, 2, 2}), Partition({4, 1, 1, 1}));
    CHECK(flipped.left() == Partition({4, 1, 1, 1}));
    CHECK_THROWS_AS(IrreduciblePair(Partition({4, 3}), Partition({5, 1, 1})), InvariantViolation);
    CHECK_THROWS_AS(IrreduciblePair(Partition({4, 3}), Partition({4, 2})), InvariantViolation);
    // (4,1,1,1,5) vs (3,2,2,5) share the part 5
    CHECK_THROWS_AS(IrreduciblePair(Partition({5, 4, 1, 1, 1}), Partition({5, 3, 2, 2})), NotDisjoint);
    IrreduciblePair reducible(Partition({5, 4, 1, 1, 1}), Partition({5, 3, 2, 2}), true);
    CHECK_FALSE(reducible.is_irreducible());
}

TEST_CASE("power family")
{
    auto p = family_power(2, 2);
    CHECK(p.left() == Partition({4, 1, 1, 1}));
    CHECK(p.right() == Partition({3, 2, 2}));
    for (int a = 2; a <= 5; ++a)
        for (int m = 1; m <= 4; ++m) {
            if (m == 1) {
                CHECK_THROWS_AS(family_power(a, m), NotDisjoint);
                continue;
            }
            auto q = family_power(a, m);
            CHECK(signature_of(q.left()) == signature_of(q.right()));
            CHECK(q.is_irreducible());
        }
    CHECK(family_power(2, 3).left() == Partition({8, 1, 1, 1, 1, 1}));
    CHECK(family_power(2, 3).right() == Partition({7, 2, 2, 2}));
    CHECK_THROWS_AS(family_power(1, 2), DomainError);
}

TEST_CASE("factorial family")
{
    CHECK(family_factorial(3) == IrreduciblePair(Partition({6, 1, 1}), Partition({5, 3})));
    auto p4 = family_factorial(4);
    CHECK(p4.left() == Partition({24, 1, 1, 1}));
    CHECK(p4.right() == Partition({23, 4}));
    CHECK(p4.n() == 27);
    CHECK(family_factorial(5).n() == 124);
    CHECK(family_factorial(6).is_irreducible());
    CHECK_THROWS_AS(family_factorial(2), DomainError);
}

TEST_CASE("combining pairs")
{
    const auto p611 = family_factorial(3), p4111 = family_power(2, 2);
    auto c = combine(p611, p4111);
    CHECK(c.n() == 15);
    CHECK(c == family_ab(1, 1));
    CHECK(c.left() == Partition({6, 4, 1, 1, 1, 1, 1}));
    CHECK(c.right() == Partition({5, 3, 3, 2, 2}));
    auto twice = combine(p4111, p4111);
    CHECK(twice.n() == 14);
    CHECK(twice.is_irreducible());
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            if (a + b == 0)
                continue;
            auto f = family_ab(a, b);
            CHECK(f.n() == 8 * a + 7 * b);
            CHECK(f.is_irreducible());
        }
    const IrreduciblePair shares(Partition({7, 4, 1, 1, 1}), Partition({7, 3, 2, 2}), true);
    CHECK_THROWS_AS(combine(p4111, shares), NotDisjoint);
    CHECK_NOTHROW(combine(p4111, shares, CombineMode::AllowReducible));
}

TEST_CASE("Diophantine lower bound")
{
    CHECK(diophantine_lower_bound(56) == 2);
    CHECK(diophantine_lower_bound(1) == 0);
    CHECK(diophantine_lower_bound(0) == 0);
    CHECK(diophantine_lower_bound(15) == 1);
    for (int n = 0; n <= 200; ++n)
        CHECK(static_cast<double>(diophantine_lower_bound(n)) > n / 56.0 - 1);
    for (int n = 0; n <= 30; ++n)
        CHECK(count_irreducible_pairs(n) >= diophantine_lower_bound(n));
}
