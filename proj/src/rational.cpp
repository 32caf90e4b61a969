#include "preper/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "preper/primes.hpp"

namespace preper {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(std::string_view text) {
  // Grammar: '-'? digits ('/' digits)?   Denominator must be positive.
  auto bad = [&] { return std::invalid_argument("Rational::parse: malformed input \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  std::string num_part(text.substr(0, i));
  if (i == text.size()) return Rational(BigInt(num_part), BigInt(1));
  if (text[i] != '/') throw bad();
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == den_begin || i != text.size()) throw bad();
  std::string den_part(text.substr(den_begin));
  return Rational(BigInt(num_part), BigInt(den_part));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = mpz_get_ui(q_.get_num_mpz_t());
  h = mix(h, static_cast<std::size_t>(mpz_sgn(q_.get_num_mpz_t()) + 1));
  h = mix(h, mpz_get_ui(q_.get_den_mpz_t()));
  return h;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

long Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation: no finite value");
  return v_;
}

Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

long prime_multiplicity(const BigInt& n, const BigInt& p) {
  if (sgn(n) == 0) throw std::domain_error("prime_multiplicity: zero input");
  if (p < 2) throw std::invalid_argument("prime_multiplicity: modulus must be >= 2");
  mpz_class reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation vp(const Rational& x, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("vp: " + p.get_str() + " is not prime");
  if (x.is_zero()) return Valuation::infinite();
  return Valuation::finite(prime_multiplicity(x.num(), p) - prime_multiplicity(x.den(), p));
}

Valuation vp(const Rational& x, long p) { return vp(x, BigInt(p)); }

BigInt floor_isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw std::domain_error("floor_isqrt: negative input");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<BigInt> perfect_square_root(const BigInt& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace preper
