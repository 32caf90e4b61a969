#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "preper/graph.hpp"
#include "preper/primes.hpp"
#include "preper/rational.hpp"

namespace preper {

/// The parametric families of quadratic parameters, tagged by the preperiodic
/// graph they produce: vertex count and cycle structure. Empty is the family
/// c = 1/p, which has no rational preperiodic points at all.
enum class FamilyTag { G4_11, G4_2, G6_11, G6_2, G6_3, G8_211, Empty };

/// Display names: "4(1,1)", "4(2)", "6(1,1)", "6(2)", "6(3)", "8(2,1,1)", "empty".
std::string family_name(FamilyTag tag);
std::optional<FamilyTag> family_from_name(const std::string& name);

/// n-th pair of consecutive odd primes, 1-based: (3,5), (5,7), (7,11), ...
std::pair<long, long> prime_pair(long n);

/// Smallest-(p,k) arithmetic progression p, p+k, p+2k of three primes lying
/// strictly inside the open interval (N, 2N); nullopt when the interval has
/// none. Such a progression exists for every N >= 15 (and for no smaller N
/// except none at all), which bounded searches confirm far beyond any index
/// used here.
std::optional<std::array<long, 3>> ap3_primes_in_interval(long N);

/// A fully validated family member: the parameter c, the closed-form
/// expected points, and the graph they should form.
struct FamilyInstance {
  FamilyTag tag;
  std::vector<long> inputs;  // (p), (p,q), or the progression (p, (p+q)/2, q)
  Rational c;
  std::vector<Rational> expected_points;  // ascending
  std::string expected_label;
  std::string expected_certificate;
};

/// Builds an instance from its prime inputs and verifies, at construction
/// time, that the expected points are forward-closed under z^2 + c and that
/// their graph carries the tag's label. Input validation is strict: the
/// required number of distinct odd primes (Empty also accepts 2), and for
/// G6_3 a prime three-term arithmetic progression, given either as the full
/// triple or as its endpoints (p, q) with (p+q)/2 prime.
FamilyInstance make_instance(FamilyTag tag, const std::vector<long>& inputs);

/// Deterministic enumeration used by the command-line driver: instance built
/// from the n-th valid input (1-based). Single-prime families walk the odd
/// primes (Empty walks all primes), pair families walk prime_pair, and G6_3
/// walks prime progressions ordered by (largest element, smallest element).
FamilyInstance family_instance_at(FamilyTag tag, long n);

/// Result of checking one instance against the actual preperiodic graph.
struct VerificationReport {
  FamilyInstance instance;
  PrePerGraph graph;             // computed full graph
  std::string computed_label;
  bool containment = false;      // expected points are all vertices
  bool exact = false;            // computed graph has exactly the expected points
  std::optional<BigInt> bound;   // local count bound, when applicable
  std::size_t count = 0;         // computed vertex count
  bool within_bound = true;      // count <= bound (vacuous without a bound)

  bool ok() const { return containment && within_bound; }
};

VerificationReport verify_instance(const FamilyInstance& inst);

}  // namespace preper
