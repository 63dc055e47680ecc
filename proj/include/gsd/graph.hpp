#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsd/errors.hpp"
#include "gsd/gf2.hpp"
#include "gsd/rng.hpp"

namespace gsd {

enum class MeasBasis { Z, Y };

struct MeasurementRecord {
  int vertex = -1;
  MeasBasis basis = MeasBasis::Z;
  // For a Y measurement, the vertex whose local complementation the rule
  // absorbed (the measured vertex itself).
  std::optional<int> companion_lc;
};

// Simple undirected graph on stable integer vertex ids. Measured ids are
// retired by the caller and never reused, so schedules and error frames can
// reference qubits unambiguously.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    for (int v = 0; v < n; ++v) adj_[v];
  }

  static Graph empty_on(const std::set<int>& vertices) {
    Graph g;
    for (int v : vertices) g.adj_[v];
    return g;
  }

  std::size_t vertex_count() const { return adj_.size(); }

  std::size_t edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& [v, nbs] : adj_) deg_sum += nbs.size();
    return deg_sum / 2;
  }

  bool has_vertex(int v) const { return adj_.count(v) != 0; }

  void add_vertex(int v) { adj_[v]; }

  std::set<int> vertices() const {
    std::set<int> vs;
    for (const auto& [v, _] : adj_) vs.insert(v);
    return vs;
  }

  const std::set<int>& neighbors(int v) const { return row(v); }

  std::size_t degree(int v) const { return row(v).size(); }

  bool has_edge(int u, int v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return it->second.count(v) != 0;
  }

  void toggle_edge(int u, int v) {
    if (u == v) throw SelfLoop(u);
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end()) throw UnknownVertex(u);
    if (iv == adj_.end()) throw UnknownVertex(v);
    if (iu->second.count(v)) {
      iu->second.erase(v);
      iv->second.erase(u);
    } else {
      iu->second.insert(v);
      iv->second.insert(u);
    }
  }

  void add_edge(int u, int v) {
    if (!has_edge(u, v)) toggle_edge(u, v);
  }

  // Toggles the edge (u, v); the graph rule for a CZ gate.
  void apply_cz(int u, int v) { toggle_edge(u, v); }

  // Complements the induced subgraph on the neighborhood of v.
  void local_complement(int v) {
    const std::set<int> nb = row(v);
    std::vector<int> ns(nb.begin(), nb.end());
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) toggle_edge(ns[i], ns[j]);
  }

  // Toggles every edge inside s; equivalent to adding a clique on s mod 2.
  void subgraph_complement(const std::set<int>& s) {
    std::vector<int> vs;
    for (int v : s) {
      if (!has_vertex(v)) throw UnknownVertex(v);
      vs.push_back(v);
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) toggle_edge(vs[i], vs[j]);
  }

  void remove_vertex(int v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw UnknownVertex(v);
    for (int nb : it->second) adj_[nb].erase(v);
    adj_.erase(it);
  }

  // Z measurement deletes the vertex; Y measurement locally complements it
  // first. Outcome byproducts are tracked by the noise frame and the
  // stabilizer oracle, not here.
  MeasurementRecord measure(int v, MeasBasis basis) {
    if (!has_vertex(v)) throw UnknownVertex(v);
    MeasurementRecord rec;
    rec.vertex = v;
    rec.basis = basis;
    if (basis == MeasBasis::Y) {
      local_complement(v);
      rec.companion_lc = v;
    }
    remove_vertex(v);
    return rec;
  }

  // Adjacency matrix over the sorted vertex list.
  BitMatrix adjacency_matrix() const {
    const std::set<int> vset = vertices();
    std::vector<int> vs(vset.begin(), vset.end());
    BitMatrix m(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (has_edge(vs[i], vs[j])) {
          m.set(i, j, true);
          m.set(j, i, true);
        }
    return m;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (const auto& [v, nbs] : adj_)
      for (int w : nbs)
        if (v < w) es.emplace_back(v, w);
    return es;
  }

  std::uint64_t content_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(adj_.size());
    for (const auto& [v, nbs] : adj_) {
      mix(static_cast<std::uint64_t>(v) + 0x9e3779b9u);
      for (int w : nbs)
        if (v < w) mix((static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w));
    }
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  const std::set<int>& row(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw UnknownVertex(v);
    return it->second;
  }

  std::map<int, std::set<int>> adj_;
};

// --- Generators -----------------------------------------------------------

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

// Hub 0 joined to a cycle on 1..n-1.
inline Graph wheel_graph(int n) {
  if (n < 4) throw UnsupportedClass("wheel graph needs at least 4 vertices");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

// Complete multipartite graph; parts are consecutive id blocks.
inline Graph multipartite_graph(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s <= 0) throw UnsupportedClass("part sizes must be positive");
    n += s;
  }
  Graph g(n);
  std::vector<int> part_of(n);
  int v = 0;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part_of[v++] = static_cast<int>(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
  return g;
}

inline Graph bipartite_graph(int a, int b) { return multipartite_graph({a, b}); }

// Erdos-Renyi G(n, p); each pair drawn independently, fixed order, so the
// result is deterministic for a fixed seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw Error("edge probability out of range");
  Graph g(n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) g.add_edge(i, j);
  return g;
}

// --- Text format -----------------------------------------------------------

// First line `n`, then one `u v` edge per line, 0-indexed.
inline Graph parse_graph_text(std::istream& in) {
  int n = -1;
  if (!(in >> n) || n < 0) throw ParseError("graph text: expected vertex count");
  Graph g(n);
  int u, v;
  while (in >> u >> v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("graph text: edge endpoint out of range");
    if (u == v) throw ParseError("graph text: self loop");
    g.add_edge(u, v);
  }
  return g;
}

inline std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in integer: " + s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer: " + s);
  }
}

inline double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in number: " + s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad number: " + s);
  }
}

}  // namespace detail

// Generator strings: complete:N, bipartite:A,B, mpartite:S1,...,Sm, path:N,
// cycle:N, star:N, wheel:N, gnp:N,P,SEED.
inline Graph make_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("graph spec needs name:params, got " + spec);
  const std::string name = spec.substr(0, colon);
  const auto args = detail::split(spec.substr(colon + 1), ',');
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw ParseError("graph spec " + name + " takes " + std::to_string(k) + " parameters");
  };
  if (name == "complete") {
    need(1);
    return complete_graph(detail::parse_int(args[0]));
  }
  if (name == "path") {
    need(1);
    return path_graph(detail::parse_int(args[0]));
  }
  if (name == "cycle") {
    need(1);
    return cycle_graph(detail::parse_int(args[0]));
  }
  if (name == "star") {
    need(1);
    return star_graph(detail::parse_int(args[0]));
  }
  if (name == "wheel") {
    need(1);
    return wheel_graph(detail::parse_int(args[0]));
  }
  if (name == "bipartite") {
    need(2);
    return bipartite_graph(detail::parse_int(args[0]), detail::parse_int(args[1]));
  }
  if (name == "mpartite") {
    if (args.empty()) throw ParseError("mpartite needs part sizes");
    std::vector<int> sizes;
    for (const auto& a : args) sizes.push_back(detail::parse_int(a));
    return multipartite_graph(sizes);
  }
  if (name == "gnp") {
    need(3);
    return random_graph(detail::parse_int(args[0]), detail::parse_double(args[1]),
                        static_cast<std::uint64_t>(detail::parse_int(args[2])));
  }
  throw ParseError("unknown graph generator: " + name);
}

}  // namespace gsd
