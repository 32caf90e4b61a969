#include "preper/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace preper {

PrePerGraph::PrePerGraph(const std::map<Rational, Rational>& successor) {
  verts_.reserve(successor.size());
  for (const auto& [v, _] : successor) verts_.push_back(v);  // map keys are sorted
  succ_.resize(verts_.size());
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Rational& image = successor.at(verts_[i]);
    auto it = std::lower_bound(verts_.begin(), verts_.end(), image);
    if (it == verts_.end() || *it != image)
      throw std::invalid_argument("PrePerGraph: successor " + image.str() + " of " +
                                  verts_[i].str() + " is not a vertex");
    succ_[i] = static_cast<std::size_t>(it - verts_.begin());
  }
}

PrePerGraph PrePerGraph::build(std::vector<Rational> vertices, const QuadMap& f) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::map<Rational, Rational> succ;
  for (const Rational& v : vertices) succ.emplace(v, f(v));
  return PrePerGraph(succ);
}

bool PrePerGraph::contains(const Rational& v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

std::size_t PrePerGraph::index_of(const Rational& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    throw std::invalid_argument("PrePerGraph: " + v.str() + " is not a vertex");
  return static_cast<std::size_t>(it - verts_.begin());
}

const Rational& PrePerGraph::successor(const Rational& v) const {
  return verts_[succ_[index_of(v)]];
}

// Marks each vertex with the id of the cycle it lies on (-1 off-cycle).
// Standard three-color walk over a functional graph.
std::vector<int> PrePerGraph::cycle_mark() const {
  const std::size_t n = verts_.size();
  std::vector<int> mark(n, -1);
  std::vector<char> state(n, 0);  // 0 unseen, 1 on current walk, 2 settled
  int next_id = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = succ_[v];
    }
    if (state[v] == 1) {
      // Found a new cycle: everything on the walk from v onward is cyclic.
      bool in_cycle = false;
      for (std::size_t w : walk) {
        if (w == v) in_cycle = true;
        if (in_cycle) mark[w] = next_id;
      }
      ++next_id;
    }
    for (std::size_t w : walk) state[w] = 2;
  }
  return mark;
}

std::vector<std::vector<Rational>> PrePerGraph::cycles() const {
  std::vector<int> mark = cycle_mark();
  int ids = 0;
  for (int m : mark) ids = std::max(ids, m + 1);

  std::vector<std::vector<Rational>> out;
  for (int id = 0; id < ids; ++id) {
    // Smallest vertex of the cycle; verts_ are ascending, so the first hit wins.
    std::size_t first = 0;
    bool found = false;
    for (std::size_t i = 0; i < verts_.size() && !found; ++i)
      if (mark[i] == id) {
        first = i;
        found = true;
      }
    std::vector<Rational> cyc;
    std::size_t v = first;
    do {
      cyc.push_back(verts_[v]);
      v = succ_[v];
    } while (v != first);
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

bool PrePerGraph::negation_closed() const {
  for (const Rational& v : verts_)
    if (!contains(-v)) return false;
  return true;
}

std::string GraphLabel::str() const {
  if (n == 0) return "0";
  std::ostringstream os;
  os << n << "(";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) os << ",";
    os << cycles[i];
  }
  os << ")";
  return os.str();
}

GraphLabel label(const PrePerGraph& g) {
  GraphLabel l;
  l.n = g.size();
  for (const auto& cyc : g.cycles()) l.cycles.push_back(cyc.size());
  // cycles() already sorts by decreasing length
  l.certificate = canonical_certificate(g);
  return l;
}

std::string canonical_certificate(const PrePerGraph& g) {
  const std::size_t n = g.verts_.size();
  const auto& succ = g.succ_;
  std::vector<int> mark = g.cycle_mark();

  // In-tree children: predecessors, except that on a cycle the cyclic
  // predecessor is part of the cycle, not of the tree.
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t w = succ[v];
    if (mark[v] >= 0 && mark[w] >= 0 && mark[v] == mark[w]) continue;  // cycle edge
    children[w].push_back(v);
  }

  // Canonical rooted-tree encoding: "(" + sorted child encodings + ")".
  std::function<std::string(std::size_t)> encode = [&](std::size_t v) {
    std::vector<std::string> parts;
    parts.reserve(children[v].size());
    for (std::size_t ch : children[v]) parts.push_back(encode(ch));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    return s;
  };

  // One string per component: the cycle's tree encodings in orbit order,
  // rotated to the lexicographically minimal sequence.
  int ids = 0;
  for (int m : mark) ids = std::max(ids, m + 1);
  std::vector<std::string> components;
  for (int id = 0; id < ids; ++id) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mark[i] == id) {
        start = i;
        break;
      }
    std::vector<std::string> seq;
    std::size_t v = start;
    do {
      seq.push_back(encode(v));
      v = succ[v];
    } while (v != start);

    std::vector<std::string> best = seq;
    for (std::size_t r = 1; r < seq.size(); ++r) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best) best = seq;
    }
    std::string comp = "[";
    for (const auto& s : best) comp += s;
    comp += "]";
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end());
  std::string cert;
  for (const auto& c : components) cert += c;
  return cert;
}

bool is_isomorphic(const PrePerGraph& a, const PrePerGraph& b) {
  if (a.size() != b.size()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

namespace {
std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}
}  // namespace

std::string to_dot(const PrePerGraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (const Rational& v : g.verts_) os << "  " << dot_quote(v.str()) << ";\n";
  for (std::size_t i = 0; i < g.verts_.size(); ++i)
    os << "  " << dot_quote(g.verts_[i].str()) << " -> " << dot_quote(g.verts_[g.succ_[i]].str())
       << ";\n";
  os << "}\n";
  return os.str();
}

void to_json(nlohmann::json& j, const GraphLabel& l) {
  j = nlohmann::json{{"n", l.n}, {"cycles", l.cycles}, {"certificate", l.certificate}};
}

}  // namespace preper
