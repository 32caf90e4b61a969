#include "preper/census.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "preper/graph.hpp"
#include "preper/local_bounds.hpp"
#include "preper/preper_search.hpp"

namespace preper {

CensusRecord census_record(long d, long m) {
  if (d < 1) throw std::invalid_argument("census_record: d must be >= 1");
  BigInt D(d), M(m);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), BigInt(D * D).get_mpz_t());
  if (g != 1) throw std::invalid_argument("census_record: m and d^2 must be coprime");

  CensusRecord rec;
  rec.d = D;
  rec.m = M;
  rec.c = Rational(M, D * D);

  PrePerGraph graph = compute_preper(rec.c);
  GraphLabel gl = label(graph);
  rec.n_points = gl.n;
  rec.label = gl.str();
  rec.cycles = gl.cycles;
  rec.certificate = gl.certificate;
  rec.points = graph.vertices();

  LocalPartition part = partition(rec.c);
  Valuation v2 = vp(rec.c, BigInt(2));
  if (!v2.is_infinite() && v2.value() < 0) rec.bad_primes.push_back(BigInt(2));
  for (const auto& b : part.bad) rec.bad_primes.push_back(b.ell);
  rec.bound = count_bound(part);
  return rec;
}

std::string to_jsonl_line(const CensusRecord& rec) {
  nlohmann::json j;
  j["c"] = rec.c.str();
  j["d"] = rec.d.get_si();
  j["m"] = rec.m.get_si();
  j["n_points"] = rec.n_points;
  j["label"] = rec.label;
  j["cycles"] = rec.cycles;
  j["certificate"] = rec.certificate;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& p : rec.bad_primes) bad.push_back(p.get_si());
  j["bad_primes"] = bad;
  if (rec.bound)
    j["bound"] = rec.bound->get_si();
  else
    j["bound"] = nullptr;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& x : rec.points) pts.push_back(x.str());
  j["points"] = pts;
  return j.dump();  // keys are emitted in sorted order: stable bytes
}

CensusRecord record_from_jsonl_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  CensusRecord rec;
  rec.c = Rational::parse(j.at("c").get<std::string>());
  rec.d = BigInt(j.at("d").get<long>());
  rec.m = BigInt(j.at("m").get<long>());
  rec.n_points = j.at("n_points").get<std::size_t>();
  rec.label = j.at("label").get<std::string>();
  rec.cycles = j.at("cycles").get<std::vector<std::size_t>>();
  rec.certificate = j.at("certificate").get<std::string>();
  for (const auto& p : j.at("bad_primes")) rec.bad_primes.push_back(BigInt(p.get<long>()));
  if (!j.at("bound").is_null()) rec.bound = BigInt(j.at("bound").get<long>());
  for (const auto& x : j.at("points")) rec.points.push_back(Rational::parse(x.get<std::string>()));
  return rec;
}

std::vector<CensusRecord> census(long max_d, long max_m) {
  std::vector<CensusRecord> out;
  census_scan(max_d, max_m, std::nullopt, [&](CensusRecord rec) { out.push_back(std::move(rec)); });
  return out;
}

std::vector<Anomaly> anomaly_scan(const std::vector<CensusRecord>& records) {
  // Labels this computation is expected to produce: the six parametric-family
  // labels, the small sporadic ones seen in census runs (8(3) first appears at
  // c = -29/16, whose 3-cycle -1/4 -> -7/4 -> 5/4 picks up preimages
  // +-3/4 -> -5/4), and any 5-point graph.
  static const std::set<std::string> allowed = {"0",    "2(1)",   "3(1,1)", "3(2)",
                                                "4(1,1)", "4(2)", "6(1,1)", "6(2)",
                                                "6(3)", "8(2,1,1)", "8(3)"};
  std::vector<Anomaly> out;
  std::map<std::string, std::string> first_cert;  // label -> first certificate seen
  for (const auto& rec : records) {
    auto flag = [&](const std::string& reason) {
      out.push_back({rec.d, rec.m, rec.label, reason});
    };
    for (std::size_t len : rec.cycles)
      if (len > 3) flag("cycle of length " + std::to_string(len));
    if (rec.n_points > 8) flag(std::to_string(rec.n_points) + " points");
    if (!allowed.count(rec.label) && rec.n_points != 5) flag("unexpected label " + rec.label);
    auto [it, inserted] = first_cert.emplace(rec.label, rec.certificate);
    if (!inserted && it->second != rec.certificate)
      flag("certificate differs from the first " + rec.label + " in this batch");
  }
  return out;
}

}  // namespace preper
