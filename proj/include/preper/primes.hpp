#pragma once

#include <utility>
#include <vector>

#include "preper/rational.hpp"

namespace preper {

/// All primes <= limit, ascending. Results come from a shared cached sieve
/// that grows on demand; safe for concurrent use.
std::vector<long> sieve_primes(long limit);

/// Primality test (exact for every size arising here; the underlying test has
/// no known failures below 2^64 and uses additional strong rounds above).
bool is_prime(const BigInt& n);
bool is_prime(long n);

struct PrimePower {
  BigInt p;
  long e;
};

/// Prime factorization of |n| by trial division against the cached sieve,
/// factors ascending. Requires n != 0. Intended for the small-height integers
/// this library produces; it is not a general-purpose factoring engine.
std::vector<PrimePower> factorize(const BigInt& n);

/// n-th odd prime, 1-based: 3, 5, 7, 11, ...
long nth_odd_prime(long n);

/// n-th prime, 1-based: 2, 3, 5, 7, ...
long nth_prime(long n);

}  // namespace preper
