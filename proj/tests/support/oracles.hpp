#pragma once

// Test-only reference implementations. Each is written directly from the
// defining property, independently of the library code it checks, so the two
// sides can disagree only when one of them is wrong.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "preper/rational.hpp"

namespace oracle {

// Primality by trial division, nothing shared with the sieve machinery.
inline bool naive_is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// First (smallest p, then smallest k) progression p, p+k, p+2k of primes
// strictly inside the open interval (N, 2N).
inline std::optional<std::array<long, 3>> ap3(long N) {
  for (long p = N + 1; p < 2 * N; ++p) {
    if (!naive_is_prime(p)) continue;
    for (long k = 1; p + 2 * k < 2 * N; ++k)
      if (naive_is_prime(p + k) && naive_is_prime(p + 2 * k))
        return std::array<long, 3>{p, p + k, p + 2 * k};
  }
  return std::nullopt;
}

// Brute-force preperiodic points of z^2 + c for c = m/d^2: iterate every
// start u/d with |u| <= 10d for up to 200 steps. A start is preperiodic when
// its orbit revisits a value, escaped when an iterate's numerator or
// denominator outgrows a fixed height cutoff. An orbit that does neither
// within the step budget would make the oracle unsound, so it throws.
inline std::vector<preper::Rational> brute_force_preper_points(long m, long d) {
  using preper::BigInt;
  using preper::Rational;
  if (d < 1) throw std::invalid_argument("oracle: d must be >= 1");
  Rational c(BigInt(m), BigInt(d) * d);
  BigInt cutoff;
  mpz_ui_pow_ui(cutoff.get_mpz_t(), 10, 40);

  std::set<Rational> pts;
  for (long u = -10 * d; u <= 10 * d; ++u) {
    Rational x{BigInt(u), BigInt(d)};
    std::vector<Rational> seen;
    Rational y = x;
    bool decided = false;
    for (int step = 0; step < 200; ++step) {
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) {
        pts.insert(x);
        decided = true;
        break;
      }
      seen.push_back(y);
      y = y * y + c;
      BigInt n = y.num();
      if (::abs(n) > cutoff || y.den() > cutoff) {
        decided = true;  // escaped
        break;
      }
    }
    if (!decided)
      throw std::runtime_error("oracle: orbit of " + x.str() + " undecided after 200 steps");
  }
  return std::vector<Rational>(pts.begin(), pts.end());
}

}  // namespace oracle
