#ifndef MNC_PRIMES_HPP
#define MNC_PRIMES_HPP

#include <vector>

namespace mnc {

// All primes p <= n in ascending order (sieve of Eratosthenes).
std::vector<int> primes_up_to(int n);

bool is_prime(int n);

// Exponent of the prime p in j!, i.e. sum over l >= 1 of floor(j / p^l).
int legendre_exponent(int j, int p);

} // namespace mnc

#endif
