#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preper/graph.hpp"
#include "preper/rational.hpp"

namespace preper {

/// Why a parameter admits no preperiodic rational points at all, decided
/// before any iteration.
enum class EmptyReason {
  NonSquareDenominator,  // den(c) is not a perfect square
  AboveOneQuarter,       // c > 1/4: the real locus is empty
};

std::string str(EmptyReason r);

/// The finite set S that must contain every rational preperiodic point of
/// z^2 + c, cut out by exact local constraints:
///   - at a prime p with v_p(c) < 0, points have v_p = v_p(c)/2, so den(c)
///     must be a perfect square d^2 and points are u/d with p never dividing
///     u for p | d;
///   - at every other prime points are p-integral;
///   - on the real line |x| <= 1/2 + sqrt(1/4 - c), so |u| <= U with
///     U = floor((d + floor_isqrt(d^2 - 4m)) / 2) for c = m/d^2.
/// When the profile is empty, empty_reason says which constraint failed.
struct CandidateProfile {
  Rational c;
  std::optional<EmptyReason> empty_reason;

  // Valid when empty_reason is not set:
  BigInt d;                      // den(c) = d^2
  BigInt m;                      // c = m/d^2 in lowest terms
  BigInt numerator_bound;        // U
  std::vector<BigInt> bad_primes;  // prime divisors of d, ascending (2 included)

  bool empty() const { return empty_reason.has_value(); }

  /// Membership in S. Exact and cheap: reduced denominator equals d, |num| <= U.
  bool contains(const Rational& x) const;

  /// Materializes S in ascending order. Prefer for_each_candidate for large U.
  std::vector<Rational> candidates() const;

  /// Calls fn(u/d) for every element of S, u ascending from -U to U.
  template <class Fn>
  void for_each_candidate(Fn&& fn) const {
    if (empty()) return;
    for (BigInt u = -numerator_bound; u <= numerator_bound; ++u) {
      bool coprime = true;  // u = 0 counts as divisible, so it only survives for d = 1
      for (const BigInt& p : bad_primes)
        if (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
          coprime = false;
          break;
        }
      if (!coprime) continue;
      fn(Rational(u, d));
    }
  }
};

CandidateProfile candidate_profile(const Rational& c);

/// The full directed graph of rational preperiodic points of z -> z^2 + c:
/// every candidate whose forward orbit stays inside the candidate set (and
/// therefore repeats) becomes a vertex, with the edge v -> v^2 + c.
PrePerGraph compute_preper(const Rational& c);

}  // namespace preper
