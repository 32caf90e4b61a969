#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "preper/rational.hpp"

namespace preper {

/// One census row: everything computed for a single parameter c = m/d^2.
struct CensusRecord {
  Rational c;
  BigInt d, m;
  std::size_t n_points = 0;
  std::string label;
  std::vector<std::size_t> cycles;  // nonincreasing
  std::string certificate;
  std::vector<BigInt> bad_primes;   // primes with v_p(c) < 0, ascending (2 included)
  std::optional<BigInt> bound;      // 2^(#odd bad primes + 1), absent when none
  std::vector<Rational> points;     // ascending
};

/// Computes the record for c = m/d^2. Requires gcd(m, d^2) = 1 and d >= 1.
CensusRecord census_record(long d, long m);

/// JSONL round trip. Lines are stable: keys are emitted sorted, values are
/// exact strings, so identical parameters always produce identical bytes.
std::string to_jsonl_line(const CensusRecord& rec);
CensusRecord record_from_jsonl_line(const std::string& line);

/// Walks the parameter grid d = 1..max_d, m = -max_m..max_m with
/// gcd(m, d^2) = 1, in that deterministic order, optionally resuming after a
/// given (d, m), and hands each record to the callback.
template <class Fn>
void census_scan(long max_d, long max_m, std::optional<std::pair<long, long>> resume_after,
                 Fn&& fn) {
  bool skipping = resume_after.has_value();
  for (long d = 1; d <= max_d; ++d) {
    BigInt dd = BigInt(d) * d;
    for (long m = -max_m; m <= max_m; ++m) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), BigInt(m).get_mpz_t(), dd.get_mpz_t());
      if (g != 1) continue;
      if (skipping) {
        if (d == resume_after->first && m == resume_after->second) skipping = false;
        continue;
      }
      fn(census_record(d, m));
    }
  }
}

/// The full grid as a vector, same order as census_scan.
std::vector<CensusRecord> census(long max_d, long max_m);

/// A record that deviates from the shapes this computation is known to
/// produce. Reported, never asserted away.
struct Anomaly {
  BigInt d, m;
  std::string label;
  std::string reason;
};

/// Flags records with a cycle longer than 3, more than 8 points, a label
/// outside the expected list (the six family labels plus the shapes observed
/// in census runs, or any 5-point graph), or a certificate that disagrees
/// with the first record of the same label in the batch.
std::vector<Anomaly> anomaly_scan(const std::vector<CensusRecord>& records);

}  // namespace preper
