#pragma once

#include <optional>
#include <string>
#include <utility>

#include "preper/rational.hpp"

namespace preper {

/// Working precision (significant p-adic digits) used by default throughout.
inline constexpr int kPadicDefaultDigits = 32;

/// Element of Q_p for an odd prime p, tracked to finite precision.
///
/// A nonzero value is stored as p^val * unit where the unit is known modulo
/// p^digits (unit in [1, p^digits), coprime to p). Zero comes in two flavors:
/// the exact zero, and a value only known to vanish modulo p^bound ("truncated
/// zero"), which is what cancellation in addition produces. Keeping the two
/// apart is what lets callers distinguish "equal" from "equal as far as we
/// can see".
///
/// p = 2 is rejected: the machinery here (unit square roots by a single
/// mod-p criterion, halving in Newton steps) is specific to odd residue
/// characteristic, and nothing in this library needs 2-adic precision.
class PadicNumber {
public:
  enum class Kind { ExactZero, TruncatedZero, Unit };

  static PadicNumber zero(long p);
  static PadicNumber truncated_zero(long p, long bound);
  static PadicNumber from_rational(const Rational& x, long p, int digits = kPadicDefaultDigits);
  /// p^val * unit with the unit known mod p^digits. The unit is reduced and
  /// must be coprime to p.
  static PadicNumber make_unit(long p, long val, const BigInt& unit, int digits);

  Kind kind() const { return kind_; }
  long prime() const { return p_; }
  bool is_zero() const { return kind_ != Kind::Unit; }

  /// Valuation of a nonzero element; throws std::logic_error on either zero.
  long valuation() const;
  /// TruncatedZero only: the value is O(p^bound). Throws otherwise.
  long zero_bound() const;
  /// Unit part and its precision (Unit kind only; throws otherwise).
  const BigInt& unit() const;
  int digits() const;

  /// Debug form: "p^v * (u mod p^N)", "0", or "O(p^k)".
  std::string str() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);

private:
  PadicNumber(long p, Kind k, long val, BigInt unit, int digits)
      : p_(p), kind_(k), val_(val), unit_(std::move(unit)), digits_(digits) {}

  long p_ = 0;
  Kind kind_ = Kind::ExactZero;
  long val_ = 0;     // Unit: valuation; TruncatedZero: the O(p^val_) bound
  BigInt unit_ = 0;  // Unit only
  int digits_ = 0;   // Unit only
};

std::ostream& operator<<(std::ostream& os, const PadicNumber& x);

/// |a - b|_p as an exponent: |a - b|_p = p^exponent. When the difference
/// vanishes to the full tracked precision the result is the explicit
/// indistinguishability marker instead of a silent zero, carrying the
/// absolute precision to which the inputs agree.
struct PadicDistance {
  enum class Kind { ExactlyEqual, Indistinguishable, Finite };
  Kind kind;
  Rational exponent;   // Finite only
  long agree_bound;    // Indistinguishable: |a - b|_p <= p^(-agree_bound)

  bool decided() const { return kind != Kind::Indistinguishable; }
};

PadicDistance padic_dist_exp(const PadicNumber& a, const PadicNumber& b);

/// Both square roots (r, -r) when x is a square in Q_p; nullopt when x is
/// recognizably a non-square (odd valuation, or non-residue unit). The first
/// root is the one whose unit is <= (p-1)/2 mod p, for determinism.
/// Exact zero yields (0, 0). A truncated zero cannot be classified and
/// throws std::domain_error.
std::optional<std::pair<PadicNumber, PadicNumber>> padic_sqrt(const PadicNumber& x);

/// Closed disk |z - center|_p <= p^radius_exp. The radius exponent is kept
/// as an exact rational so fractional radii (p^(1/2) and friends) need no
/// rounding.
struct PadicDisk {
  PadicNumber center;
  Rational radius_exp;

  /// True/false when membership is decidable at the tracked precision,
  /// nullopt when the distance to the center is indistinguishable from zero
  /// but the radius is smaller than the precision floor.
  std::optional<bool> contains(const PadicNumber& x) const;
};

}  // namespace preper
