#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "preper/rational.hpp"

namespace preper {

/// The quadratic map z -> z^2 + c.
struct QuadMap {
  Rational c;
  Rational operator()(const Rational& x) const { return x * x + c; }
};

/// Monic polynomial of degree >= 2 with rational coefficients; the leading
/// coefficient 1 is implicit. Degree 2 with coefficients {c, 0} is QuadMap.
class MonicPoly {
public:
  /// Coefficients low-to-high for z^0 .. z^(d-1); the degree is their count.
  explicit MonicPoly(std::vector<Rational> lower_coeffs);

  static MonicPoly quadratic(const Rational& c) { return MonicPoly({c, Rational(0)}); }

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& lower_coeffs() const { return coeffs_; }
  Rational evaluate(const Rational& x) const;

private:
  std::vector<Rational> coeffs_;
};

/// Decomposition of a finite forward orbit: tail (pre-cyclic part, in orbit
/// order, possibly empty) followed by the cycle (in orbit order, starting at
/// the first revisited point). Tail and cycle are disjoint and each is
/// duplicate-free.
struct OrbitInfo {
  std::vector<Rational> tail;
  std::vector<Rational> cycle;
};

/// (cycle length a, tail length b): the orbit enters an a-cycle after
/// exactly b steps.
inline std::pair<std::size_t, std::size_t> orbit_type(const OrbitInfo& o) {
  return {o.cycle.size(), o.tail.size()};
}

/// Follows x, f(x), f(f(x)), ... while the iterates stay inside the member
/// set. Returns the tail/cycle split when a repeat occurs, nullopt as soon as
/// an iterate leaves the set (the orbit escapes). Terminates for any finite
/// member set.
template <class Pred>
std::optional<OrbitInfo> orbit_detect(const QuadMap& f, const Rational& start, Pred&& member) {
  std::vector<Rational> path;
  Rational x = start;
  while (true) {
    if (!member(x)) return std::nullopt;
    auto it = std::find(path.begin(), path.end(), x);
    if (it != path.end()) {
      OrbitInfo o;
      o.tail.assign(path.begin(), it);
      o.cycle.assign(it, path.end());
      return o;
    }
    path.push_back(x);
    x = f(x);
  }
}

}  // namespace preper
