#include "preper/preper_search.hpp"

#include "preper/dynamics.hpp"
#include "preper/primes.hpp"

namespace preper {

std::string str(EmptyReason r) {
  switch (r) {
    case EmptyReason::NonSquareDenominator:
      return "non-square denominator";
    case EmptyReason::AboveOneQuarter:
      return "c > 1/4";
  }
  return "?";
}

bool CandidateProfile::contains(const Rational& x) const {
  if (empty()) return false;
  // x in lowest terms with den(x) = d already forces gcd(num, d) = 1.
  if (x.den() != d) return false;
  BigInt n = x.num();
  return ::abs(n) <= numerator_bound;
}

std::vector<Rational> CandidateProfile::candidates() const {
  std::vector<Rational> out;
  for_each_candidate([&](const Rational& x) { out.push_back(x); });
  return out;
}

CandidateProfile candidate_profile(const Rational& c) {
  CandidateProfile prof;
  prof.c = c;

  auto root = perfect_square_root(c.den());
  if (!root) {
    prof.empty_reason = EmptyReason::NonSquareDenominator;
    return prof;
  }
  if (c > Rational(1, 4)) {
    prof.empty_reason = EmptyReason::AboveOneQuarter;
    return prof;
  }
  prof.d = *root;
  prof.m = c.num();
  // |u/d| <= 1/2 + sqrt(1/4 - m/d^2)  <=>  2|u| - d <= sqrt(d^2 - 4m), and
  // since the left side is an integer the floor of the root is enough.
  BigInt t = prof.d * prof.d - 4 * prof.m;
  prof.numerator_bound = (prof.d + floor_isqrt(t)) / 2;
  for (const auto& f : factorize(prof.d)) prof.bad_primes.push_back(f.p);
  return prof;
}

PrePerGraph compute_preper(const Rational& c) {
  CandidateProfile prof = candidate_profile(c);
  if (prof.empty()) return PrePerGraph();
  QuadMap f{c};
  std::vector<Rational> verts;
  prof.for_each_candidate([&](const Rational& x) {
    if (orbit_detect(f, x, [&](const Rational& y) { return prof.contains(y); }))
      verts.push_back(x);
  });
  return PrePerGraph::build(std::move(verts), f);
}

}  // namespace preper
