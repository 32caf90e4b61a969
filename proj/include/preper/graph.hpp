#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "preper/dynamics.hpp"
#include "preper/rational.hpp"

namespace preper {

/// Finite functional digraph on rational vertices: every vertex has exactly
/// one outgoing edge and the successor of a vertex is again a vertex. The
/// graphs produced by the orbit machinery additionally have all vertices
/// preperiodic by construction (every component is a cycle with in-trees
/// hanging off it), which is automatic for any finite functional graph.
class PrePerGraph {
public:
  PrePerGraph() = default;  // empty graph

  /// Explicit successor map. Every value must itself be a key.
  explicit PrePerGraph(const std::map<Rational, Rational>& successor);

  /// Vertex set closed under f: successor(v) = f(v). Throws when some f(v)
  /// falls outside the set.
  static PrePerGraph build(std::vector<Rational> vertices, const QuadMap& f);

  bool empty() const { return verts_.empty(); }
  std::size_t size() const { return verts_.size(); }
  /// Vertices in ascending order.
  const std::vector<Rational>& vertices() const { return verts_; }
  bool contains(const Rational& v) const;
  const Rational& successor(const Rational& v) const;

  /// The cycles, each in orbit order starting from its smallest vertex,
  /// listed by decreasing length then by smallest vertex.
  std::vector<std::vector<Rational>> cycles() const;

  /// Whether -v is a vertex whenever v is.
  bool negation_closed() const;

private:
  std::vector<Rational> verts_;  // sorted ascending
  std::vector<std::size_t> succ_;

  std::size_t index_of(const Rational& v) const;  // throws when absent
  std::vector<int> cycle_mark() const;  // -1 off-cycle, else cycle id per vertex
  friend std::string canonical_certificate(const PrePerGraph& g);
  friend std::string to_dot(const PrePerGraph& g);
};

/// Isomorphism-class label of a graph: vertex count plus the multiset of
/// cycle lengths, rendered as "N(l1,l2,...)" with lengths nonincreasing, or
/// "0" for the empty graph. The certificate pins the full isomorphism class,
/// which the coarse (n, cycles) pair does not.
struct GraphLabel {
  std::size_t n = 0;
  std::vector<std::size_t> cycles;  // nonincreasing
  std::string certificate;

  std::string str() const;
};

GraphLabel label(const PrePerGraph& g);

/// Canonical certificate: two graphs get equal strings exactly when they are
/// isomorphic as directed graphs. Built from rooted-tree canonical encodings
/// of the in-trees, a minimal rotation per cycle, and a sorted component
/// list, so it is invariant under every relabeling of the vertices.
std::string canonical_certificate(const PrePerGraph& g);

bool is_isomorphic(const PrePerGraph& a, const PrePerGraph& b);

/// Graphviz rendering with one node per vertex (labeled by its exact value)
/// and one edge v -> successor(v); deterministic output.
std::string to_dot(const PrePerGraph& g);

void to_json(nlohmann::json& j, const GraphLabel& l);

}  // namespace preper
