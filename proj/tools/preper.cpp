// Command-line driver: computes preperiodic-point graphs of z^2 + c over Q,
// verifies the parametric families, reports local bounds, and runs censuses
// over bounded parameter grids.
//
// Exit codes: 0 success, 1 usage error, 2 a verification found a containment
// violation, 3 anomalies found in strict mode.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "preper/census.hpp"
#include "preper/families.hpp"
#include "preper/graph.hpp"
#include "preper/local_bounds.hpp"
#include "preper/preper_search.hpp"

namespace {

using namespace preper;

int run_compute(const std::string& c_text, const std::string& dot_path, bool as_json) {
  Rational c = Rational::parse(c_text);
  PrePerGraph g = compute_preper(c);
  GraphLabel gl = label(g);

  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "error: cannot write " << dot_path << "\n";
      return 1;
    }
    out << to_dot(g);
  }

  if (as_json) {
    nlohmann::json j;
    j["c"] = c.str();
    j["label"] = gl.str();
    j["n_points"] = gl.n;
    j["cycles"] = gl.cycles;
    j["certificate"] = gl.certificate;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& v : g.vertices()) pts.push_back(v.str());
    j["points"] = pts;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& v : g.vertices()) edges.push_back({v.str(), g.successor(v).str()});
    j["edges"] = edges;
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "c = " << c << "\n";
  std::cout << "graph: " << gl.str() << " (" << gl.n << " preperiodic points)\n";
  if (!g.empty()) {
    std::cout << "points:";
    for (const auto& v : g.vertices()) std::cout << " " << v;
    std::cout << "\n";
    for (const auto& cyc : g.cycles()) {
      std::cout << "cycle (" << cyc.size() << "):";
      for (const auto& v : cyc) std::cout << " " << v;
      std::cout << "\n";
    }
    for (const auto& v : g.vertices())
      std::cout << "  " << v << " -> " << g.successor(v) << "\n";
  }
  return 0;
}

int run_bound(const std::string& c_text) {
  Rational c = Rational::parse(c_text);
  LocalPartition part = partition(c);
  std::cout << "c = " << c << "\n";
  std::cout << "infinity: radius " << part.arch.str() << " (doubling allowance "
            << part.eps_arch << ")\n";
  std::cout << "2: radius 2^(" << part.r2_exp << ")\n";
  if (part.bad.empty()) {
    std::cout << "no odd primes divide den(c); count bound not applicable\n";
    return 0;
  }
  for (const auto& b : part.bad)
    std::cout << b.ell << ": radius " << b.ell << "^(" << b.radius_exp << ")\n";
  auto bound = count_bound(part);
  std::cout << "preperiodic points <= 2^(" << part.bad.size() << "+1) = " << *bound << "\n";
  return 0;
}

int run_family(const std::string& graph_name, long count, long start) {
  auto tag = family_from_name(graph_name);
  if (!tag) {
    std::cerr << "error: unknown family \"" << graph_name
              << "\" (expected 4(1,1), 4(2), 6(1,1), 6(2), 6(3), 8(2,1,1), or empty)\n";
    return 1;
  }
  bool violation = false;
  for (long n = start; n < start + count; ++n) {
    FamilyInstance inst = family_instance_at(*tag, n);
    VerificationReport rep = verify_instance(inst);
    std::cout << family_name(*tag) << " #" << n << ": inputs (";
    for (std::size_t i = 0; i < inst.inputs.size(); ++i)
      std::cout << (i ? ", " : "") << inst.inputs[i];
    std::cout << "), c = " << inst.c << ", computed " << rep.computed_label
              << ", containment " << (rep.containment ? "yes" : "NO")
              << ", exact " << (rep.exact ? "yes" : "no");
    if (rep.bound) std::cout << ", count " << rep.count << " <= bound " << *rep.bound;
    std::cout << "\n";
    if (!rep.containment || !rep.within_bound) violation = true;
  }
  return violation ? 2 : 0;
}

int run_census(long max_d, long max_m, const std::string& out_path, bool resume, bool strict) {
  std::vector<CensusRecord> records;
  std::optional<std::pair<long, long>> resume_after;

  if (resume) {
    std::ifstream in(out_path);
    std::string line, last_good;
    std::vector<std::string> kept;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        records.push_back(record_from_jsonl_line(line));
        kept.push_back(line);
        last_good = line;
      } catch (const std::exception&) {
        break;  // torn final line from an interrupted run: drop it and recompute
      }
    }
    in.close();
    if (!last_good.empty()) {
      const CensusRecord& last = records.back();
      long d = last.d.get_si(), m = last.m.get_si();
      if (d > max_d || m < -max_m || m > max_m) {
        std::cerr << "error: existing records lie outside the requested grid; "
                     "resume requires the same --max-den/--max-num\n";
        return 1;
      }
      resume_after = std::make_pair(d, m);
      // Rewrite the file with only intact lines so a torn tail never lingers.
      std::ofstream out(out_path, std::ios::trunc);
      for (const auto& l : kept) out << l << "\n";
    }
  }

  std::ofstream out(out_path, resume ? std::ios::app : std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  std::size_t fresh = 0;
  census_scan(max_d, max_m, resume_after, [&](CensusRecord rec) {
    out << to_jsonl_line(rec) << "\n";
    records.push_back(std::move(rec));
    ++fresh;
  });
  out.close();

  std::cout << "census d <= " << max_d << ", |m| <= " << max_m << ": " << records.size()
            << " parameters (" << fresh << " computed this run) -> " << out_path << "\n";

  auto anomalies = anomaly_scan(records);
  for (const auto& a : anomalies)
    std::cerr << "anomaly: d = " << a.d << ", m = " << a.m << ", label " << a.label << ": "
              << a.reason << "\n";
  if (!anomalies.empty()) {
    std::cerr << anomalies.size() << " anomalies\n";
    if (strict) return 3;
  }
  return 0;
}

int run_ap3(long N) {
  auto t = ap3_primes_in_interval(N);
  if (!t) {
    std::cout << "none\n";
    return 0;
  }
  std::cout << (*t)[0] << " " << (*t)[1] << " " << (*t)[2] << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"preperiodic points of z^2 + c over the rationals"};
  app.require_subcommand(1);

  std::string c_text, dot_path, graph_name, out_path;
  bool as_json = false, resume = false, strict = false;
  long count = 1, start = 1, max_d = 0, max_m = 0, N = 0;

  auto* compute = app.add_subcommand("compute", "compute the preperiodic graph for one parameter");
  compute->add_option("--c", c_text, "parameter c as m/d")->required();
  compute->add_option("--dot", dot_path, "write the graph in dot format to this file");
  compute->add_flag("--json", as_json, "emit a single JSON object instead of text");

  auto* bound = app.add_subcommand("bound", "show the local radii and the count bound");
  bound->add_option("--c", c_text, "parameter c as m/d")->required();

  auto* family = app.add_subcommand("family", "verify members of a parametric family");
  family->add_option("--graph", graph_name, "family name: 4(1,1) 4(2) 6(1,1) 6(2) 6(3) 8(2,1,1) empty")
      ->required();
  family->add_option("--count", count, "how many instances")->required();
  family->add_option("--start", start, "1-based index of the first instance");

  auto* census_cmd = app.add_subcommand("census", "sweep c = m/d^2 over a bounded grid");
  census_cmd->add_option("--max-den", max_d, "largest d")->required();
  census_cmd->add_option("--max-num", max_m, "largest |m|")->required();
  census_cmd->add_option("--out", out_path, "output JSONL file")->required();
  census_cmd->add_flag("--resume", resume, "continue an interrupted run appending to --out");
  census_cmd->add_flag("--strict", strict, "exit 3 when anomalies are found");

  auto* ap3 = app.add_subcommand("ap3", "three primes in arithmetic progression inside (N, 2N)");
  ap3->add_option("--n", N, "interval parameter N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(compute)) return run_compute(c_text, dot_path, as_json);
    if (app.got_subcommand(bound)) return run_bound(c_text);
    if (app.got_subcommand(family)) return run_family(graph_name, count, start);
    if (app.got_subcommand(census_cmd)) return run_census(max_d, max_m, out_path, resume, strict);
    if (app.got_subcommand(ap3)) return run_ap3(N);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
