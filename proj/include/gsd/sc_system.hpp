#pragma once

#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsd/errors.hpp"
#include "gsd/graph.hpp"

namespace gsd {

enum class Provenance { trivial, closed_form, greedy, elimination, exact };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::trivial: return "trivial";
    case Provenance::closed_form: return "closed-form";
    case Provenance::greedy: return "greedy";
    case Provenance::elimination: return "elimination";
    case Provenance::exact: return "exact";
  }
  return "?";
}

// An ordered sequence of vertex subsets, one subgraph complementation each.
// Replaying the sets over the empty graph rebuilds the target graph whose
// content hash is stored alongside.
struct ScSystem {
  int n = 0;
  std::vector<std::set<int>> sets;
  Provenance provenance = Provenance::trivial;
  std::uint64_t target_hash = 0;

  std::size_t size() const { return sets.size(); }

  void check_sets() const {
    for (const auto& s : sets) {
      if (s.size() < 2) throw Error("SC sets must have at least two vertices");
      for (int v : s)
        if (v < 0 || v >= n) throw Error("SC set vertex out of range");
    }
  }
};

// Folds the system's subgraph complementations over the empty n-vertex
// graph. SC operations commute, so order is immaterial.
inline Graph replay(const ScSystem& system) {
  system.check_sets();
  Graph g(system.n);
  for (const auto& s : system.sets) g.subgraph_complement(s);
  return g;
}

inline bool replays_to(const ScSystem& system, const Graph& target) {
  return replay(system) == target;
}

inline ScSystem make_system(const Graph& target, std::vector<std::set<int>> sets, Provenance prov) {
  ScSystem sys;
  const std::set<int> vs = target.vertices();
  if (!vs.empty() && (*vs.begin() != 0 || *vs.rbegin() != static_cast<int>(vs.size()) - 1))
    throw Error("SC systems require graphs on contiguous 0..n-1 vertex ids");
  sys.n = static_cast<int>(vs.size());
  sys.sets = std::move(sets);
  sys.provenance = prov;
  sys.target_hash = target.content_hash();
  sys.check_sets();
  if (!replays_to(sys, target)) throw SystemMismatch("constructed system does not replay to its target");
  return sys;
}

// Text format: first line `n d`, then one line per set listing vertex ids.
inline std::string format_system_text(const ScSystem& system) {
  std::ostringstream out;
  out << system.n << " " << system.sets.size() << "\n";
  for (const auto& s : system.sets) {
    bool first = true;
    for (int v : s) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

inline ScSystem parse_system_text(std::istream& in) {
  ScSystem sys;
  std::size_t d = 0;
  if (!(in >> sys.n >> d)) throw ParseError("system text: expected `n d` header");
  std::string line;
  std::getline(in, line);
  while (sys.sets.size() < d && std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::set<int> s;
    int v;
    while (ls >> v) s.insert(v);
    if (!s.empty()) sys.sets.push_back(std::move(s));
  }
  if (sys.sets.size() != d) throw ParseError("system text: fewer sets than declared");
  sys.check_sets();
  sys.target_hash = replay(sys).content_hash();
  return sys;
}

}  // namespace gsd
