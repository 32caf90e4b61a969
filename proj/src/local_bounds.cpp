#include "preper/local_bounds.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "preper/padic.hpp"

namespace preper {

// ---- archimedean radius ----

ArchRadius::ArchRadius(const Rational& c) : c_(c) {}

bool ArchRadius::empty() const { return c_ > Rational(1, 4); }

bool ArchRadius::contains(const Rational& x) const {
  if (empty()) return false;
  Rational a = abs(x) - Rational(1, 2);
  if (a.sign() <= 0) return true;
  return a * a <= Rational(1, 4) - c_;
}

std::optional<Rational> ArchRadius::exact() const {
  if (empty()) return std::nullopt;
  Rational t = Rational(1, 4) - c_;
  auto rn = perfect_square_root(t.num());
  auto rd = perfect_square_root(t.den());
  if (!rn || !rd) return std::nullopt;
  return Rational(1, 2) + Rational(*rn, *rd);
}

Rational ArchRadius::upper_bound() const {
  if (empty()) return Rational(0);
  if (auto e = exact()) return *e;
  // Least s with (s/10^6)^2 >= 1/4 - c; then the radius is <= 1/2 + s/10^6.
  Rational t = Rational(1, 4) - c_;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 12);
  BigInt N = t.num() * scale, D = t.den();
  BigInt s = floor_isqrt(N / D);
  while (s * s * D < N) ++s;
  return Rational(1, 2) + Rational(s, BigInt(1000000));
}

std::string ArchRadius::str() const {
  if (empty()) return "empty";
  if (auto e = exact()) return e->str();
  return "<= " + upper_bound().str();
}

// ---- partition of the places ----

bool LocalPartition::in_A(const BigInt& ell) const {
  if (ell < 3 || !is_prime(ell)) return false;
  for (const auto& b : bad)
    if (b.ell == ell) return false;
  return true;
}

LocalPartition partition(const Rational& c) {
  LocalPartition part(c);
  Valuation v2 = vp(c, BigInt(2));
  if (!v2.is_infinite() && v2.value() < 0) part.r2_exp = Rational(-v2.value(), 2);
  for (const auto& f : factorize(c.den()))
    if (f.p != 2) part.bad.push_back({f.p, Rational(f.e, 2)});
  return part;
}

std::optional<BigInt> count_bound(const LocalPartition& part) {
  if (part.bad.empty()) return std::nullopt;
  BigInt b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(part.degree),
                static_cast<unsigned long>(part.bad.size() + 1));
  return b;
}

// ---- product formula ----

ProductFormulaCertificate product_formula_check(const Rational& alpha, const Rational& beta) {
  if (alpha == beta)
    throw std::invalid_argument("product_formula_check: the two points must differ");
  ProductFormulaCertificate cert;
  cert.difference = alpha - beta;
  BigInt num = cert.difference.num(), den = cert.difference.den();

  std::map<BigInt, long> exps;
  if (::abs(num) != 1)
    for (const auto& f : factorize(num)) exps[f.p] += f.e;
  if (den != 1)
    for (const auto& f : factorize(den)) exps[f.p] -= f.e;

  cert.finite_product = Rational(1);
  for (const auto& [p, e] : exps) {
    if (e == 0) continue;
    cert.finite_exponents.emplace_back(p, e);
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    // contributes |.|_p = p^(-e)
    cert.finite_product =
        e > 0 ? cert.finite_product / Rational(pe) : cert.finite_product * Rational(pe);
  }
  cert.archimedean = abs(cert.difference);
  cert.product_is_one = cert.archimedean * cert.finite_product == Rational(1);
  return cert;
}

// ---- disk covers ----

namespace {

// Valuation of (w - root) for one root target. Either exact, or a certified
// lower bound, or unknown (nothing certifiable at working precision).
struct ValBound {
  bool infinite = false;
  bool lower_bound_only = false;
  bool unknown = false;
  Rational v;
};

// One disk center (or an inseparable set of centers) at a given level.
struct Target {
  enum class Kind {
    RatRoot,            // exact rational root
    PadRoot,            // root in Q_ell known to working precision
    ConjPair,           // z^2 = A has no root in Q_ell: the conjugate pair, jointly
    UnresolvedQuartet,  // all four second-level roots behind a conjugate first level
    Undecidable,        // equation vanished below working precision
  };
  Kind kind = Kind::RatRoot;
  Rational rat;                      // RatRoot: the root; ConjPair with rational A: that A
  std::optional<PadicNumber> pad;   // PadRoot: the root; ConjPair with padic A: that A
  std::string desc;
  Rational quartet_c, quartet_x0;    // UnresolvedQuartet only

  static Target rational_root(const Rational& r) {
    return {Kind::RatRoot, r, std::nullopt, "z = " + r.str(), {}, {}};
  }
  static Target padic_root(const PadicNumber& r) {
    return {Kind::PadRoot, Rational(0), r, "z = " + r.str(), {}, {}};
  }
};

ValBound from_padic_distance(const PadicDistance& d) {
  switch (d.kind) {
    case PadicDistance::Kind::ExactlyEqual:
      return {.infinite = true, .lower_bound_only = false, .unknown = false, .v = Rational(0)};
    case PadicDistance::Kind::Indistinguishable:
      return {.infinite = false, .lower_bound_only = true, .unknown = false, .v = Rational(d.agree_bound)};
    case PadicDistance::Kind::Finite:
      break;
  }
  return {.infinite = false, .lower_bound_only = false, .unknown = false, .v = -d.exponent};
}

ValBound dist_to(const Target& t, const Rational& w, long ell) {
  switch (t.kind) {
    case Target::Kind::RatRoot: {
      if (w == t.rat) return {.infinite = true, .lower_bound_only = false, .unknown = false, .v = Rational(0)};
      return {.infinite = false, .lower_bound_only = false, .unknown = false,
              .v = Rational(vp(w - t.rat, BigInt(ell)).value())};
    }
    case Target::Kind::PadRoot: {
      PadicNumber wp = PadicNumber::from_rational(w, ell);
      return from_padic_distance(padic_dist_exp(wp, *t.pad));
    }
    case Target::Kind::ConjPair: {
      // For the conjugate roots x, x' of z^2 = A and rational w:
      // v(w - x) = v(w - x') = v(w^2 - A)/2.
      if (!t.pad) {
        Rational diff = w * w - t.rat;
        if (diff.is_zero())  // cannot happen: A is not a rational square
          return {.infinite = true, .lower_bound_only = false, .unknown = false, .v = Rational(0)};
        return {.infinite = false, .lower_bound_only = false, .unknown = false,
                .v = Rational(vp(diff, BigInt(ell)).value(), 2)};
      }
      PadicNumber wp = PadicNumber::from_rational(w, ell);
      ValBound b = from_padic_distance(padic_dist_exp(wp * wp, *t.pad));
      b.v = b.v / Rational(2);
      return b;
    }
    case Target::Kind::UnresolvedQuartet: {
      // The product of the four distances |w - x| over the roots x of
      // f(f(z)) = x0 equals |f(f(w)) - x0|, so the best one obeys
      // v(w - x) >= v(f(f(w)) - x0)/4.
      Rational w1 = w * w + t.quartet_c;
      Rational w2 = w1 * w1 + t.quartet_c;
      Rational diff = w2 - t.quartet_x0;
      if (diff.is_zero())
        return {.infinite = true, .lower_bound_only = false, .unknown = false, .v = Rational(0)};
      return {.infinite = false, .lower_bound_only = true, .unknown = false,
              .v = Rational(vp(diff, BigInt(ell)).value(), 4)};
    }
    case Target::Kind::Undecidable:
      return {.infinite = false, .lower_bound_only = false, .unknown = true, .v = Rational(0)};
  }
  throw std::logic_error("dist_to: bad target kind");
}

// Roots of z^2 = A over Q_ell for rational A.
std::vector<Target> square_targets(const Rational& A, long ell) {
  if (A.is_zero()) return {Target::rational_root(Rational(0))};
  auto rn = perfect_square_root(A.num());
  auto rd = perfect_square_root(A.den());
  if (rn && rd) {
    Rational r(*rn, *rd);
    return {Target::rational_root(r), Target::rational_root(-r)};
  }
  PadicNumber Ap = PadicNumber::from_rational(A, ell);
  if (auto roots = padic_sqrt(Ap))
    return {Target::padic_root(roots->first), Target::padic_root(roots->second)};
  return {Target{Target::Kind::ConjPair, A, std::nullopt,
                 "conjugate pair: z^2 = " + A.str() + " (no root in Q_" + std::to_string(ell) + ")",
                 {}, {}}};
}

// Roots of z^2 = A for A known only in Q_ell.
std::vector<Target> square_targets(const PadicNumber& A, long ell) {
  if (A.kind() == PadicNumber::Kind::ExactZero) return {Target::rational_root(Rational(0))};
  if (A.kind() == PadicNumber::Kind::TruncatedZero)
    return {Target{Target::Kind::Undecidable, Rational(0), std::nullopt,
                   "undecidable: equation vanishes below working precision", {}, {}}};
  if (auto roots = padic_sqrt(A))
    return {Target::padic_root(roots->first), Target::padic_root(roots->second)};
  return {Target{Target::Kind::ConjPair, Rational(0), A,
                 "conjugate pair: z^2 = " + A.str() + " (no root in Q_" + std::to_string(ell) + ")",
                 {}, {}}};
}

// The best target meeting the threshold: largest certified valuation wins,
// exact coincidence beats everything, earlier index breaks ties. undecided is
// set when some target could neither admit nor exclude the point.
struct Pick {
  int index = -1;
  ValBound best;
  bool undecided = false;
};

Pick pick_disk(const std::vector<Target>& targets, const Rational& w, long ell,
               const Rational& threshold) {
  Pick pick;
  auto better = [](const ValBound& a, const ValBound& old) {
    if (a.infinite != old.infinite) return a.infinite;
    if (a.infinite) return false;
    return a.v > old.v;
  };
  for (std::size_t i = 0; i < targets.size(); ++i) {
    ValBound b = dist_to(targets[i], w, ell);
    if (b.unknown) {
      pick.undecided = true;
      continue;
    }
    if (!(b.infinite || b.v >= threshold)) {
      // Not a member of this disk. A lower bound below the threshold leaves
      // membership open rather than excluded.
      if (b.lower_bound_only) pick.undecided = true;
      continue;
    }
    if (pick.index < 0 || better(b, pick.best)) {
      pick.index = static_cast<int>(i);
      pick.best = b;
    }
  }
  return pick;
}

}  // namespace

bool DiskCoverReport::addresses_pairwise_distinct() const {
  std::set<int> seen;
  for (const auto& a : addresses) {
    if (a.second_disk < 0) return false;
    if (!seen.insert(a.second_disk).second) return false;
  }
  return true;
}

DiskCoverReport disk_cover_check(const Rational& c, const BigInt& ell, const Rational& x0,
                                 const std::vector<Rational>& points) {
  if (ell < 3 || !is_prime(ell))
    throw std::invalid_argument("disk_cover_check: place must be an odd prime");
  if (!ell.fits_slong_p())
    throw std::invalid_argument("disk_cover_check: place out of supported range");
  long l = ell.get_si();
  Valuation vc = vp(c, ell);
  if (vc.is_infinite() || vc.value() >= 0)
    throw std::invalid_argument("disk_cover_check: " + ell.get_str() +
                                " does not divide the denominator of c");

  DiskCoverReport rep;
  rep.place = l;
  rep.radius_exp = Rational(-vc.value(), 2);        // r = ell^(-v(c)/2)
  rep.second_radius_exp = Rational(vc.value(), 4);  // r^(-1/2)
  const Rational first_threshold(0);
  const Rational second_threshold = -rep.second_radius_exp;

  // First containment: roots of z^2 = x0 - c, disks of radius 1.
  std::vector<Target> first = square_targets(x0 - c, l);
  for (const auto& t : first) rep.first_disks.push_back(t.desc);

  // Second containment: roots of z^2 = x - c over each first-level root x,
  // disks of radius r^(-1/2).
  std::vector<Target> second;
  for (const Target& t : first) {
    std::vector<Target> up;
    switch (t.kind) {
      case Target::Kind::RatRoot:
        up = square_targets(t.rat - c, l);
        break;
      case Target::Kind::PadRoot:
        up = square_targets(*t.pad - PadicNumber::from_rational(c, l), l);
        break;
      case Target::Kind::ConjPair:
        up = {Target{Target::Kind::UnresolvedQuartet, Rational(0), std::nullopt,
                     "unresolved quartet: f(f(z)) = " + x0.str() + " behind " + t.desc, c, x0}};
        break;
      default:
        throw std::logic_error("disk_cover_check: unexpected first-level target");
    }
    for (auto& u : up) second.push_back(std::move(u));
  }
  for (const auto& t : second) rep.second_disks.push_back(t.desc);

  for (const Rational& w : points) {
    DiskCoverReport::PointAddress addr;
    addr.point = w;

    Pick p1 = pick_disk(first, w, l, first_threshold);
    if (p1.index < 0) {
      rep.violations.push_back(
          p1.undecided ? "first containment undecidable at working precision for " + w.str()
                       : "first containment violated: " + w.str() + " lies in no unit preimage disk");
    } else {
      addr.first_disk = p1.index;
      if (p1.best.lower_bound_only) addr.exact = false;
    }

    Pick p2 = pick_disk(second, w, l, second_threshold);
    if (p2.index < 0) {
      std::ostringstream os;
      if (p2.undecided) {
        os << "second containment undecidable at working precision for " << w.str();
      } else {
        os << "second containment violated: " << w.str() << " lies in no disk of radius " << l
           << "^(" << rep.second_radius_exp.str() << ")";
      }
      rep.violations.push_back(os.str());
    } else {
      addr.second_disk = p2.index;
      if (p2.best.lower_bound_only) addr.exact = false;
    }
    rep.addresses.push_back(addr);
  }
  return rep;
}

void to_json(nlohmann::json& j, const DiskCoverReport& r) {
  nlohmann::json addrs = nlohmann::json::array();
  for (const auto& a : r.addresses)
    addrs.push_back({{"point", a.point.str()},
                     {"first_disk", a.first_disk},
                     {"second_disk", a.second_disk},
                     {"exact", a.exact}});
  j = nlohmann::json{{"place", r.place},
                     {"radius_exp", r.radius_exp.str()},
                     {"addresses", addrs},
                     {"violations", r.violations}};
}

}  // namespace preper
