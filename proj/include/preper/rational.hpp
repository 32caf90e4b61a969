#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace preper {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
/// Zero is 0/1. All arithmetic is exact; there is no floating point anywhere
/// in this type.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}
  explicit Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  /// Parses "m/d" or "m" with an optional leading '-'. Round-trips with str().
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "m/d", or just "m" when the value is an integer.
  std::string str() const;

  std::size_t hash() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Value of a p-adic valuation: an integer, or +infinity for the zero input.
class Valuation {
public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const;  // throws std::logic_error when infinite

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return finite(a.v_ + b.v_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

private:
  Valuation(bool inf, long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long v_;
};

Valuation min(const Valuation& a, const Valuation& b);

/// Multiplicity of the prime p in n. Requires n != 0 and p >= 2.
long prime_multiplicity(const BigInt& n, const BigInt& p);

/// p-adic valuation of x: multiplicity of p in the numerator minus the
/// multiplicity in the denominator; +infinity for x = 0.
/// Throws std::invalid_argument when p is not prime.
Valuation vp(const Rational& x, const BigInt& p);
Valuation vp(const Rational& x, long p);

/// Largest s with s*s <= n. Throws std::domain_error for n < 0.
BigInt floor_isqrt(const BigInt& n);

/// The exact square root when n is a perfect square, nullopt otherwise.
std::optional<BigInt> perfect_square_root(const BigInt& n);

}  // namespace preper

template <>
struct std::hash<preper::Rational> {
  std::size_t operator()(const preper::Rational& x) const { return x.hash(); }
};
