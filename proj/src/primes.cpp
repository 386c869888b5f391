#include "mnc/primes.hpp"

#include <cstddef>

namespace mnc {

std::vector<int> primes_up_to(int n)
{
    std::vector<int> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (int i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (long long k = static_cast<long long>(i) * i; k <= n; k += i)
            composite[static_cast<std::size_t>(k)] = true;
    }
    return out;
}

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int legendre_exponent(int j, int p)
{
    int e = 0;
    for (long long pk = p; pk <= j; pk *= p)
        e += static_cast<int>(j / pk);
    return e;
}

} // namespace mnc
