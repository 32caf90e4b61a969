#include "preper/padic.hpp"

#include <ostream>
#include <stdexcept>

#include "preper/primes.hpp"

namespace preper {

namespace {

void check_prime(long p) {
  if (p == 2) throw std::invalid_argument("PadicNumber: p = 2 is not supported");
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("PadicNumber: p must be an odd prime");
}

BigInt pow_p(long p, long e) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return m;
}

BigInt invert_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("PadicNumber: non-invertible element");
  return r;
}

void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("PadicNumber: mixing different primes");
}

}  // namespace

PadicNumber PadicNumber::zero(long p) {
  check_prime(p);
  return PadicNumber(p, Kind::ExactZero, 0, 0, 0);
}

PadicNumber PadicNumber::truncated_zero(long p, long bound) {
  check_prime(p);
  return PadicNumber(p, Kind::TruncatedZero, bound, 0, 0);
}

PadicNumber PadicNumber::make_unit(long p, long val, const BigInt& unit, int digits) {
  check_prime(p);
  if (digits < 1) throw std::invalid_argument("PadicNumber: precision must be >= 1");
  BigInt m = pow_p(p, digits);
  BigInt u = unit % m;
  if (sgn(u) < 0) u += m;
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("PadicNumber: unit part must be coprime to p");
  return PadicNumber(p, Kind::Unit, val, u, digits);
}

PadicNumber PadicNumber::from_rational(const Rational& x, long p, int digits) {
  check_prime(p);
  if (digits < 1) throw std::invalid_argument("PadicNumber: precision must be >= 1");
  if (x.is_zero()) return zero(p);
  BigInt bp(p);
  BigInt num = x.num(), den = x.den();
  long a = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), bp.get_mpz_t()));
  long b = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t()));
  BigInt m = pow_p(p, digits);
  BigInt u = (num % m) * invert_mod(den % m, m) % m;
  if (sgn(u) < 0) u += m;
  return PadicNumber(p, Kind::Unit, a - b, u, digits);
}

long PadicNumber::valuation() const {
  if (kind_ != Kind::Unit) throw std::logic_error("PadicNumber: valuation of (truncated) zero");
  return val_;
}

long PadicNumber::zero_bound() const {
  if (kind_ != Kind::TruncatedZero) throw std::logic_error("PadicNumber: not a truncated zero");
  return val_;
}

const BigInt& PadicNumber::unit() const {
  if (kind_ != Kind::Unit) throw std::logic_error("PadicNumber: zero has no unit part");
  return unit_;
}

int PadicNumber::digits() const {
  if (kind_ != Kind::Unit) throw std::logic_error("PadicNumber: zero has no precision");
  return digits_;
}

std::string PadicNumber::str() const {
  switch (kind_) {
    case Kind::ExactZero:
      return "0";
    case Kind::TruncatedZero:
      return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
    case Kind::Unit:
      break;
  }
  return std::to_string(p_) + "^" + std::to_string(val_) + " * (" + unit_.get_str() +
         " mod " + std::to_string(p_) + "^" + std::to_string(digits_) + ")";
}

PadicNumber PadicNumber::operator-() const {
  if (kind_ != Kind::Unit) return *this;
  BigInt m = pow_p(p_, digits_);
  return PadicNumber(p_, Kind::Unit, val_, m - unit_, digits_);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  using K = PadicNumber::Kind;
  if (a.kind() == K::ExactZero || b.kind() == K::ExactZero) return PadicNumber::zero(a.prime());
  if (a.kind() == K::TruncatedZero || b.kind() == K::TruncatedZero) {
    // O(p^A) * (p^v * unit) = O(p^(A+v));  O(p^A) * O(p^B) = O(p^(A+B)).
    long ea = a.kind() == K::TruncatedZero ? a.zero_bound() : a.valuation();
    long eb = b.kind() == K::TruncatedZero ? b.zero_bound() : b.valuation();
    return PadicNumber::truncated_zero(a.prime(), ea + eb);
  }
  int digits = std::min(a.digits(), b.digits());
  BigInt m = pow_p(a.prime(), digits);
  BigInt u = a.unit() * b.unit() % m;
  return PadicNumber::make_unit(a.prime(), a.valuation() + b.valuation(), u, digits);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  using K = PadicNumber::Kind;
  long p = a.prime();
  if (a.kind() == K::ExactZero) return b;
  if (b.kind() == K::ExactZero) return a;
  if (a.kind() == K::TruncatedZero && b.kind() == K::TruncatedZero)
    return PadicNumber::truncated_zero(p, std::min(a.zero_bound(), b.zero_bound()));
  if (a.kind() == K::TruncatedZero || b.kind() == K::TruncatedZero) {
    const PadicNumber& z = a.kind() == K::TruncatedZero ? a : b;
    const PadicNumber& u = a.kind() == K::TruncatedZero ? b : a;
    long bound = z.zero_bound();
    if (u.valuation() >= bound) return PadicNumber::truncated_zero(p, bound);
    long digits = std::min<long>(u.digits(), bound - u.valuation());
    BigInt m = pow_p(p, digits);
    return PadicNumber::make_unit(p, u.valuation(), u.unit() % m, static_cast<int>(digits));
  }

  // Two units. Absolute precision of the sum is the weaker of the two.
  long abs_prec = std::min(a.valuation() + a.digits(), b.valuation() + b.digits());
  long v = std::min(a.valuation(), b.valuation());
  if (v >= abs_prec) return PadicNumber::truncated_zero(p, abs_prec);
  BigInt m = pow_p(p, abs_prec - v);
  BigInt s = (a.unit() * pow_p(p, a.valuation() - v) + b.unit() * pow_p(p, b.valuation() - v)) % m;
  if (sgn(s) == 0) return PadicNumber::truncated_zero(p, abs_prec);
  long t = prime_multiplicity(s, BigInt(p));
  if (v + t >= abs_prec) return PadicNumber::truncated_zero(p, abs_prec);
  mpz_remove(s.get_mpz_t(), s.get_mpz_t(), BigInt(p).get_mpz_t());
  return PadicNumber::make_unit(p, v + t, s, static_cast<int>(abs_prec - v - t));
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

std::ostream& operator<<(std::ostream& os, const PadicNumber& x) { return os << x.str(); }

PadicDistance padic_dist_exp(const PadicNumber& a, const PadicNumber& b) {
  PadicNumber d = a - b;
  switch (d.kind()) {
    case PadicNumber::Kind::ExactZero:
      return {PadicDistance::Kind::ExactlyEqual, Rational(0), 0};
    case PadicNumber::Kind::TruncatedZero:
      return {PadicDistance::Kind::Indistinguishable, Rational(0), d.zero_bound()};
    case PadicNumber::Kind::Unit:
      break;
  }
  return {PadicDistance::Kind::Finite, Rational(-d.valuation()), 0};
}

std::optional<std::pair<PadicNumber, PadicNumber>> padic_sqrt(const PadicNumber& x) {
  using K = PadicNumber::Kind;
  if (x.kind() == K::ExactZero) return std::make_pair(x, x);
  if (x.kind() == K::TruncatedZero)
    throw std::domain_error("padic_sqrt: input indistinguishable from zero at precision " +
                            std::to_string(x.zero_bound()));
  long p = x.prime();
  if (x.valuation() % 2 != 0) return std::nullopt;  // odd valuation: not a square

  BigInt bp(p);
  BigInt u0 = x.unit() % bp;
  // Euler's criterion on the leading digit decides squareness of the unit.
  BigInt euler;
  BigInt e2((p - 1) / 2);
  mpz_powm(euler.get_mpz_t(), u0.get_mpz_t(), e2.get_mpz_t(), bp.get_mpz_t());
  if (euler != 1) return std::nullopt;

  // Root of the leading digit.
  BigInt r;
  if (p % 4 == 3) {
    BigInt e((p + 1) / 4);
    mpz_powm(r.get_mpz_t(), u0.get_mpz_t(), e.get_mpz_t(), bp.get_mpz_t());
  } else {
    r = 0;
    for (long t = 1; t < p; ++t) {
      if ((BigInt(t) * t) % bp == u0) {
        r = t;
        break;
      }
    }
  }

  // Newton lift r -> (r + u/r)/2, doubling the correct digits each step.
  int target = x.digits();
  long have = 1;
  BigInt inv2, m;
  while (have < target) {
    long next = std::min<long>(2 * have, target);
    m = pow_p(p, next);
    BigInt u = x.unit() % m;
    BigInt rinv = r;
    mpz_invert(rinv.get_mpz_t(), rinv.get_mpz_t(), m.get_mpz_t());
    mpz_invert(inv2.get_mpz_t(), BigInt(2).get_mpz_t(), m.get_mpz_t());
    r = (r + u * rinv) % m * inv2 % m;
    have = next;
  }
  m = pow_p(p, target);
  r %= m;
  if (sgn(r) < 0) r += m;

  // Canonical order: first the root whose leading digit is <= (p-1)/2.
  BigInt other = m - r;
  if (r % bp > (p - 1) / 2) std::swap(r, other);
  long half_val = x.valuation() / 2;
  return std::make_pair(PadicNumber::make_unit(p, half_val, r, target),
                        PadicNumber::make_unit(p, half_val, other, target));
}

std::optional<bool> PadicDisk::contains(const PadicNumber& x) const {
  PadicDistance d = padic_dist_exp(x, center);
  switch (d.kind) {
    case PadicDistance::Kind::ExactlyEqual:
      return true;
    case PadicDistance::Kind::Finite:
      return d.exponent <= radius_exp;
    case PadicDistance::Kind::Indistinguishable:
      break;
  }
  // Distance is at most p^(-agree_bound); decidable only if that already
  // fits inside the disk.
  if (Rational(-d.agree_bound) <= radius_exp) return true;
  return std::nullopt;
}

}  // namespace preper
