#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "preper/primes.hpp"
#include "preper/rational.hpp"

namespace preper {

/// Exact description of the real bound |x| <= 1/2 + sqrt(1/4 - c) satisfied
/// by every real point with bounded forward orbit under z^2 + c. No floating
/// point: membership tests square out the root, and the radius is reported
/// either exactly (when 1/4 - c is a rational square) or as the least
/// millionth above it.
class ArchRadius {
public:
  explicit ArchRadius(const Rational& c);

  /// c > 1/4: no real point has a bounded orbit.
  bool empty() const;
  /// |x| <= 1/2 + sqrt(1/4 - c), decided exactly.
  bool contains(const Rational& x) const;
  /// The radius itself when it is rational.
  std::optional<Rational> exact() const;
  /// Least k/10^6 at or above the radius (equals the radius when rational
  /// with denominator dividing 10^6). Empty radius reports 0.
  Rational upper_bound() const;
  std::string str() const;

private:
  Rational c_;
};

/// The places of Q split by their effect on bounded orbits of z^2 + c:
///   A: odd primes where c is integral -- orbits stay in the unit disk, and
///      these places never enter the count bound;
///   B: the archimedean place and 2 -- always kept, with radii R_inf (the
///      real radius above, doubling allowance eps = 1) and R_2 = max(1,
///      |c|_2^(1/2));
///   C: odd primes ell dividing den(c) -- there bounded orbits live on the
///      sphere of radius r_ell = ell^(-v_ell(c)/2), and each such prime
///      doubles the count bound.
struct LocalPartition {
  explicit LocalPartition(const Rational& param) : c(param), arch(param) {}

  Rational c;
  int degree = 2;

  ArchRadius arch;       // R_inf
  int eps_arch = 1;      // archimedean doubling allowance
  Rational r2_exp;       // R_2 = 2^r2_exp, r2_exp = max(0, -v_2(c)/2)

  struct BadPrime {
    BigInt ell;
    Rational radius_exp;  // r_ell = ell^radius_exp = ell^(-v_ell(c)/2)
  };
  std::vector<BadPrime> bad;  // the set C, ascending

  /// Whether a finite prime has the good-reduction radius 1 (the set A).
  bool in_A(const BigInt& ell) const;
};

LocalPartition partition(const Rational& c);

/// Count bound 2^(#C + 1) on the rational preperiodic points of z^2 + c.
/// Not applicable (nullopt) when C is empty.
std::optional<BigInt> count_bound(const LocalPartition& part);

/// Exact certificate that the absolute values of alpha - beta over all
/// places multiply to 1. Throws std::invalid_argument when alpha = beta.
struct ProductFormulaCertificate {
  Rational difference;
  std::vector<std::pair<BigInt, long>> finite_exponents;  // (p, v_p), ascending, v_p != 0
  Rational archimedean;     // |alpha - beta|
  Rational finite_product;  // prod p^(-v_p), exact
  bool product_is_one;      // archimedean * finite_product == 1
};

ProductFormulaCertificate product_formula_check(const Rational& alpha, const Rational& beta);

/// Certified covering of the bounded-orbit locus at one bad prime ell by
/// preimage disks, together with the address each rational preperiodic point
/// receives:
///   first containment:  the locus lies in the union of D(x, 1) over the
///                       roots x of z^2 + c = x0;
///   second containment: it lies in the union of D(x, r^(-1/2)) over the
///                       roots x of the second iterate equation, with
///                       r = ell^(-v_ell(c)/2).
/// Roots are found exactly over Q when possible and in Q_ell (to the default
/// precision) otherwise; a conjugate pair outside Q_ell is kept symbolically
/// and distances to it are computed through the norm, still exactly.
struct DiskCoverReport {
  long place = 0;
  Rational radius_exp;         // r = ell^radius_exp
  Rational second_radius_exp;  // second-containment disks have radius ell^this

  std::vector<std::string> first_disks;   // one descriptor per preimage root (or pair)
  std::vector<std::string> second_disks;  // one per second-preimage root (or pair)

  struct PointAddress {
    Rational point;
    int first_disk = -1;   // index into first_disks; -1 when containment failed
    int second_disk = -1;  // index into second_disks; -1 when containment failed
    bool exact = true;     // false when only a lower bound on closeness was certified
  };
  std::vector<PointAddress> addresses;

  /// Containment failures and undecidable-at-precision outcomes; empty when
  /// every point landed in a disk of both generations.
  std::vector<std::string> violations;

  bool all_contained() const { return violations.empty(); }
  /// No two points share a second-containment disk.
  bool addresses_pairwise_distinct() const;
};

/// Checks both containments at the odd prime ell (which must have
/// v_ell(c) < 0) for the given base point x0 and reports the disk address of
/// every point in `points`. x0 is meant to be a preperiodic point of z^2 + c
/// and `points` a set of such; the checks themselves do not assume it.
DiskCoverReport disk_cover_check(const Rational& c, const BigInt& ell, const Rational& x0,
                                 const std::vector<Rational>& points);

void to_json(nlohmann::json& j, const DiskCoverReport& r);

}  // namespace preper
