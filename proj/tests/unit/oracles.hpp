// Test-only brute-force oracles. Nothing here calls into the library's
// enumeration, signature or series code.
#ifndef MNC_TESTS_ORACLES_HPP
#define MNC_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;

// Every partition of n as a non-increasing vector with all parts satisfying
// allowed(part); built by recursion on the largest part.
inline std::vector<std::vector<int>> partitions(int n, const std::function<bool(int)>& allowed, int largest = -1)
{
    if (largest < 0)
        largest = n;
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (int first = std::min(n, largest); first >= 1; --first) {
        if (!allowed(first))
            continue;
        for (auto& rest : partitions(n - first, allowed, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

inline cpp_int factorial(int n)
{
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Trial-division factorization of a positive integer.
inline std::map<int, int> factorize(cpp_int v)
{
    std::map<int, int> f;
    for (int d = 2; cpp_int(d) * d <= v; ++d)
        while (v % d == 0) {
            ++f[d];
            v /= d;
        }
    if (v > 1)
        ++f[static_cast<int>(v)];
    return f;
}

// Distinct values of n!/prod parts! computed from the integers themselves.
inline std::size_t distinct_values(int n, const std::function<bool(int)>& allowed, int max_parts = -1)
{
    std::set<cpp_int> values;
    const cpp_int nf = factorial(n);
    for (const auto& p : partitions(n, allowed)) {
        if (max_parts >= 0 && static_cast<int>(p.size()) > max_parts)
            continue;
        cpp_int den = 1;
        for (int j : p)
            den *= factorial(j);
        values.insert(nf / den);
    }
    return values.size();
}

inline bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace oracle

#endif
