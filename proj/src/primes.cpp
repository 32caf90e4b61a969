#include "preper/primes.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace preper {

namespace {

// Shared sieve cache: flags[i] says whether i is prime, for i < flags.size().
struct SieveCache {
  std::mutex mu;
  std::vector<char> flags;   // flags[i] != 0  <=>  i prime
  std::vector<long> primes;  // ascending primes < flags.size()

  void grow(long limit) {
    if (static_cast<long>(flags.size()) > limit) return;
    long n = std::max<long>(limit + 1, 1 << 10);
    n = std::max<long>(n, static_cast<long>(flags.size()) * 2);
    std::vector<char> f(static_cast<std::size_t>(n), 1);
    f[0] = 0;
    if (n > 1) f[1] = 0;
    for (long i = 2; i * i < n; ++i) {
      if (!f[static_cast<std::size_t>(i)]) continue;
      for (long j = i * i; j < n; j += i) f[static_cast<std::size_t>(j)] = 0;
    }
    std::vector<long> ps;
    for (long i = 2; i < n; ++i)
      if (f[static_cast<std::size_t>(i)]) ps.push_back(i);
    flags = std::move(f);
    primes = std::move(ps);
  }
};

SieveCache& cache() {
  static SieveCache c;
  return c;
}

}  // namespace

std::vector<long> sieve_primes(long limit) {
  if (limit < 2) return {};
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.grow(limit);
  auto end = std::upper_bound(c.primes.begin(), c.primes.end(), limit);
  return std::vector<long>(c.primes.begin(), end);
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(long n) { return is_prime(BigInt(n)); }

std::vector<PrimePower> factorize(const BigInt& n) {
  if (sgn(n) == 0) throw std::domain_error("factorize: zero input");
  BigInt m = ::abs(n);
  std::vector<PrimePower> out;

  std::vector<long> ps;
  std::size_t idx = 0;
  while (m > 1) {
    if (is_prime(m)) {  // covers prime remainders without sieving past sqrt
      out.push_back({m, 1});
      return out;
    }
    BigInt root = floor_isqrt(m);
    if (!root.fits_slong_p())
      throw std::domain_error("factorize: input out of supported range");
    long bound = root.get_si();
    if (ps.empty() || ps.back() < bound) ps = sieve_primes(bound);

    bool divided = false;
    while (idx < ps.size() && ps[idx] <= bound) {
      long p = ps[idx];
      if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        BigInt bp(p);
        long e = prime_multiplicity(m, bp);
        out.push_back({bp, e});
        BigInt q;
        mpz_pow_ui(q.get_mpz_t(), bp.get_mpz_t(), static_cast<unsigned long>(e));
        m /= q;
        ++idx;  // p is fully divided out; smaller primes cannot reappear
        divided = true;
        break;  // shrink the bound against the reduced remainder
      }
      ++idx;
    }
    if (!divided) {
      // No prime <= sqrt(m) divides m, so the remainder is prime.
      out.push_back({m, 1});
      return out;
    }
  }
  return out;
}

long nth_odd_prime(long n) {
  if (n < 1) throw std::invalid_argument("nth_odd_prime: index must be >= 1");
  return nth_prime(n + 1);
}

long nth_prime(long n) {
  if (n < 1) throw std::invalid_argument("nth_prime: index must be >= 1");
  long limit = 64;
  while (true) {
    auto ps = sieve_primes(limit);
    if (static_cast<long>(ps.size()) >= n) return ps[static_cast<std::size_t>(n - 1)];
    limit *= 2;
  }
}

}  // namespace preper
