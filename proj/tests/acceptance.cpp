// Acceptance checks: one line per criterion, [PASS]/[FAIL] verdicts, exit
// code = number of failures. Each criterion is exact arithmetic end to end;
// "recorded" quantities are printed but only the stated requirements fail a
// criterion.

#include <cstddef>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "preper/census.hpp"
#include "preper/families.hpp"
#include "preper/graph.hpp"
#include "preper/local_bounds.hpp"
#include "preper/padic.hpp"
#include "preper/preper_search.hpp"
#include "support/oracles.hpp"

using namespace preper;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << detail << "\n";
  if (!pass) ++g_failures;
}

void run(int index, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [pass, detail] = body();
    report(index, pass, detail);
  } catch (const std::exception& e) {
    report(index, false, std::string("exception: ") + e.what());
  }
}

std::vector<long> odd_primes_up_to(long limit) {
  std::vector<long> out;
  for (long p : sieve_primes(limit))
    if (p != 2) out.push_back(p);
  return out;
}

// Shared instance pools so later criteria reuse earlier computations.
struct Pools {
  std::vector<VerificationReport> fixed_pair;   // criterion 1, one per odd prime <= 199
  std::vector<VerificationReport> two_cycle;    // criterion 2
  std::vector<VerificationReport> six_eight;    // criterion 3, 3 families x 20 pairs
  std::vector<VerificationReport> three_cycle;  // criterion 4, 5 progressions
  std::vector<Rational> empty_params;           // criterion 5
};

Pools pools;

std::pair<bool, std::string> criterion_fixed_points() {
  std::size_t bad = 0;
  auto primes = odd_primes_up_to(199);
  for (long p : primes) {
    VerificationReport rep = verify_instance(make_instance(FamilyTag::G4_11, {p}));
    if (!(rep.exact && rep.count == 4 && rep.computed_label == "4(1,1)")) ++bad;
    pools.fixed_pair.push_back(std::move(rep));
  }
  std::ostringstream os;
  os << "two-fixed-points family exact (4 points, label 4(1,1)) for all " << primes.size()
     << " odd primes <= 199";
  if (bad) os << "; " << bad << " instances deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_two_cycle() {
  std::size_t bad = 0;
  auto primes = odd_primes_up_to(199);
  for (long p : primes) {
    VerificationReport rep = verify_instance(make_instance(FamilyTag::G4_2, {p}));
    if (!(rep.exact && rep.count == 4 && rep.computed_label == "4(2)")) ++bad;
    pools.two_cycle.push_back(std::move(rep));
  }
  std::ostringstream os;
  os << "two-cycle family exact (4 points, label 4(2)) for all " << primes.size()
     << " odd primes <= 199";
  if (bad) os << "; " << bad << " instances deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_six_eight_families() {
  std::size_t containment_failures = 0, oracle_mismatches = 0, exact_count = 0, total = 0;
  for (FamilyTag tag : {FamilyTag::G6_11, FamilyTag::G6_2, FamilyTag::G8_211}) {
    for (long n = 1; n <= 20; ++n) {
      auto [p, q] = prime_pair(n);
      VerificationReport rep = verify_instance(make_instance(tag, {p, q}));
      ++total;
      if (!rep.containment) ++containment_failures;
      if (rep.exact) ++exact_count;

      // Independent cross-check: the iterate-and-cutoff oracle must see the
      // same vertex set, so recorded exactness is exactly oracle exactness.
      auto root = perfect_square_root(rep.instance.c.den());
      std::vector<Rational> expected_by_oracle =
          oracle::brute_force_preper_points(rep.instance.c.num().get_si(), root->get_si());
      if (rep.graph.vertices() != expected_by_oracle) ++oracle_mismatches;

      pools.six_eight.push_back(std::move(rep));
    }
  }
  std::ostringstream os;
  os << "6- and 8-point families over the first 20 consecutive-odd-prime pairs: containment "
     << (total - containment_failures) << "/" << total << ", exact " << exact_count << "/" << total
     << ", oracle agreement " << (total - oracle_mismatches) << "/" << total;
  return {containment_failures == 0 && oracle_mismatches == 0, os.str()};
}

std::pair<bool, std::string> criterion_three_cycle() {
  // Five distinct prime progressions: the two hand seeds, then fresh triples
  // from the interval search, deduplicated.
  std::vector<std::array<long, 3>> triples = {{3, 5, 7}, {3, 7, 11}};
  for (long N = 15; triples.size() < 5 && N < 4000; ++N) {
    auto t = ap3_primes_in_interval(N);
    if (!t) continue;
    bool fresh = true;
    for (const auto& have : triples)
      if (have == *t) fresh = false;
    if (fresh) triples.push_back(*t);
  }
  if (triples.size() < 5) return {false, "could not collect 5 prime progressions"};

  std::size_t bad = 0;
  std::ostringstream list;
  for (const auto& t : triples) {
    VerificationReport rep =
        verify_instance(make_instance(FamilyTag::G6_3, {t[0], t[1], t[2]}));
    bool ok = rep.containment && rep.bound && *rep.bound == 16 && BigInt(rep.count) <= *rep.bound;
    if (!ok) ++bad;
    list << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
    pools.three_cycle.push_back(std::move(rep));
  }
  std::ostringstream os;
  os << "three-cycle family contained with count <= bound 16 on " << triples.size()
     << " prime progressions:" << list.str();
  if (bad) os << "; " << bad << " instances deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_empty() {
  std::size_t bad = 0, total = 0;
  for (long p : sieve_primes(97)) {
    Rational c(BigInt(1), BigInt(p));
    pools.empty_params.push_back(c);
    ++total;
    if (!compute_preper(c).empty()) ++bad;
  }
  std::ostringstream os;
  os << "c = 1/p has no preperiodic rational points for all " << total << " primes p <= 97";
  if (bad) os << "; " << bad << " instances deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_count_bounds() {
  // Expected number of odd bad primes per family, and bound attainment for
  // the four-point families.
  std::size_t bad = 0, total = 0;
  auto check_pool = [&](const std::vector<VerificationReport>& pool, std::size_t want_c,
                        bool attained) {
    for (const auto& rep : pool) {
      ++total;
      LocalPartition part = partition(rep.instance.c);
      bool ok = part.bad.size() == want_c && rep.bound.has_value() &&
                rep.within_bound && *rep.bound == count_bound(part).value();
      if (ok && attained) ok = BigInt(rep.count) == *rep.bound;
      if (!ok) ++bad;
    }
  };
  check_pool(pools.fixed_pair, 1, true);
  check_pool(pools.two_cycle, 1, true);
  for (std::size_t i = 0; i < pools.six_eight.size(); ++i) {
    ++total;
    const auto& rep = pools.six_eight[i];
    LocalPartition part = partition(rep.instance.c);
    if (!(part.bad.size() == 2 && rep.within_bound)) ++bad;
  }
  check_pool(pools.three_cycle, 3, false);
  std::ostringstream os;
  os << "local count bound holds on all " << total
     << " family instances (odd bad primes 1/1/2/3, bound met with equality for the "
        "four-point families)";
  if (bad) os << "; " << bad << " instances deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_disk_cover() {
  std::size_t bad = 0;
  std::ostringstream detail;
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    FamilyInstance inst = make_instance(FamilyTag::G4_11, {p});
    PrePerGraph g = compute_preper(inst.c);
    Rational x0 = g.vertices().back();  // 1/2 + 1/p, itself preperiodic
    DiskCoverReport rep = disk_cover_check(inst.c, BigInt(p), x0, g.vertices());
    bool full = true;
    for (const auto& a : rep.addresses)
      if (a.first_disk < 0 || a.second_disk < 0) full = false;
    bool ok = rep.all_contained() && full && rep.addresses_pairwise_distinct() &&
              rep.addresses.size() == g.size();
    if (!ok) {
      ++bad;
      detail << " p=" << p << " failed";
      for (const auto& v : rep.violations) detail << " [" << v << "]";
    }
  }
  std::ostringstream os;
  os << "disk covers at the bad prime for p in {3,5,7,11,13}: both containments and "
        "pairwise-distinct full addresses for every preperiodic point"
     << detail.str();
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_product_formula() {
  std::size_t pairs = 0, bad = 0;
  auto check_graph = [&](const PrePerGraph& g) {
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        ++pairs;
        if (!product_formula_check(vs[i], vs[j]).product_is_one) ++bad;
      }
  };
  for (const auto& rep : pools.fixed_pair) check_graph(rep.graph);
  for (const auto& rep : pools.two_cycle) check_graph(rep.graph);
  for (const auto& rep : pools.six_eight) check_graph(rep.graph);
  for (const auto& rep : pools.three_cycle) check_graph(rep.graph);
  // Empty-family graphs contribute no pairs by construction.
  std::ostringstream os;
  os << "product of |a - b| over all places is exactly 1 for " << pairs
     << " pairs of distinct preperiodic points";
  if (bad) os << "; " << bad << " pairs deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_oracle_grid() {
  std::size_t cells = 0, bad = 0;
  for (long d = 1; d <= 6; ++d) {
    for (long m = -60; m <= 60; ++m) {
      BigInt g, M(m), DD(BigInt(d) * d);
      mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), DD.get_mpz_t());
      if (g != 1) continue;
      ++cells;
      PrePerGraph graph = compute_preper(Rational(M, BigInt(d) * d));
      if (graph.vertices() != oracle::brute_force_preper_points(m, d)) ++bad;
    }
  }
  std::ostringstream os;
  os << "search agrees with the independent iterate-and-cutoff oracle on all " << cells
     << " parameters with d <= 6, |m| <= 60";
  if (bad) os << "; " << bad << " cells deviated";
  return {bad == 0, os.str()};
}

std::pair<bool, std::string> criterion_census() {
  auto records = census(6, 60);
  std::size_t bad_cycle = 0, bad_size = 0;
  for (const auto& rec : records) {
    for (std::size_t len : rec.cycles)
      if (len >= 4) ++bad_cycle;
    if (rec.n_points > 8) ++bad_size;
  }
  auto anomalies = anomaly_scan(records);
  std::ostringstream os;
  os << "census d <= 6, |m| <= 60 (" << records.size()
     << " parameters): no cycle of length >= 4, no graph over 8 points, " << anomalies.size()
     << " anomalies";
  for (const auto& a : anomalies)
    os << " [d=" << a.d << " m=" << a.m << " " << a.label << ": " << a.reason << "]";
  return {bad_cycle == 0 && bad_size == 0 && anomalies.empty(), os.str()};
}

std::pair<bool, std::string> criterion_hensel() {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::size_t trials = 0, bad = 0;
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    std::uniform_int_distribution<long> unit(1, 1000000000L);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int i = 0; i < 1000; ++i) {
      long u = unit(rng);
      if (u % p == 0) {
        --i;
        continue;
      }
      // x = (p^(2v) u^2) is a square by construction; recover its roots.
      PadicNumber base = PadicNumber::make_unit(p, val(rng), BigInt(u), kPadicDefaultDigits);
      PadicNumber x = base * base;
      ++trials;
      auto roots = padic_sqrt(x);
      if (!roots) {
        ++bad;
        continue;
      }
      const auto& [r1, r2] = *roots;
      // Exact congruence mod p^32: the recovered root squares back to x and
      // matches +-base digit for digit.
      bool square_back = (r1 * r1 - x).kind() != PadicNumber::Kind::Unit &&
                         (r2 * r2 - x).kind() != PadicNumber::Kind::Unit;
      bool matches_base = (r1.valuation() == base.valuation()) &&
                          (r1.unit() == base.unit() || r2.unit() == base.unit());
      bool canonical = r1.unit() % p <= (p - 1) / 2 && r1.digits() == kPadicDefaultDigits;
      if (!(square_back && matches_base && canonical)) ++bad;
    }
  }
  std::ostringstream os;
  os << "Hensel square-root round-trips exact mod p^32 for " << trials
     << " randomized inputs across p in {3,5,7,11,13}";
  if (bad) os << "; " << bad << " trials deviated";
  return {bad == 0, os.str()};
}

}  // namespace

int main() {
  run(1, criterion_fixed_points);
  run(2, criterion_two_cycle);
  run(3, criterion_six_eight_families);
  run(4, criterion_three_cycle);
  run(5, criterion_empty);
  run(6, criterion_count_bounds);
  run(7, criterion_disk_cover);
  run(8, criterion_product_formula);
  run(9, criterion_oracle_grid);
  run(10, criterion_census);
  run(11, criterion_hensel);

  if (g_failures == 0)
    std::cout << "all 11 criteria passed\n";
  else
    std::cout << g_failures << " of 11 criteria failed\n";
  return g_failures;
}
