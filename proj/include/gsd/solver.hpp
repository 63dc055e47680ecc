#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <vector>

#include "gsd/gf2.hpp"
#include "gsd/graph.hpp"
#include "gsd/sc_system.hpp"

namespace gsd {

struct SolverLimits {
  std::size_t exact = 8;           // non-isolated vertices for the exact search
  std::size_t min_rank = 20;       // exhaustive minimum-rank enumeration
  std::size_t cut_rank_avg = 16;   // exact expected cut-rank
};

// One 2-set per edge.
inline ScSystem trivial_system(const Graph& g) {
  std::vector<std::set<int>> sets;
  for (auto [u, v] : g.edges()) sets.push_back({u, v});
  return make_system(g, std::move(sets), Provenance::trivial);
}

// Max-degree star elimination: two sets ({v} u N(v), N(v)) net exactly the
// star at v; a single edge costs one set. Replay correctness holds by
// construction; no optimality claim.
inline ScSystem greedy_system(const Graph& g) {
  Graph work = g;
  std::vector<std::set<int>> sets;
  for (;;) {
    int best = -1;
    std::size_t best_deg = 0;
    for (int v : work.vertices()) {
      const std::size_t d = work.degree(v);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best < 0 || best_deg == 0) break;
    const std::set<int> nbs = work.neighbors(best);
    std::set<int> star = nbs;
    star.insert(best);
    sets.push_back(star);
    if (nbs.size() > 1) sets.push_back(nbs);
    for (int w : nbs) work.toggle_edge(best, w);
  }
  return make_system(g, std::move(sets), Provenance::greedy);
}

// Rank-one peeling with a free diagonal: repeatedly complement
// {v} u N(v) for the lowest unfinished vertex. Each step isolates one
// vertex, so at most n-1 sets are emitted for any graph.
inline ScSystem elimination_system(const Graph& g) {
  Graph work = g;
  std::vector<std::set<int>> sets;
  for (;;) {
    int pick = -1;
    for (int v : work.vertices())
      if (work.degree(v) > 0) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    std::set<int> s = work.neighbors(pick);
    s.insert(pick);
    sets.push_back(s);
    work.subgraph_complement(s);
  }
  return make_system(g, std::move(sets), Provenance::elimination);
}

// Smallest system wins; provenance breaks ties (exact > closed-form >
// elimination > greedy > trivial).
inline ScSystem pick_best(std::vector<ScSystem> candidates) {
  auto pref = [](Provenance p) {
    switch (p) {
      case Provenance::exact: return 0;
      case Provenance::closed_form: return 1;
      case Provenance::elimination: return 2;
      case Provenance::greedy: return 3;
      case Provenance::trivial: return 4;
    }
    return 5;
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    const auto& b = candidates[best];
    if (c.size() < b.size() || (c.size() == b.size() && pref(c.provenance) < pref(b.provenance)))
      best = i;
  }
  return std::move(candidates[best]);
}

// --- Closed forms -----------------------------------------------------------

namespace detail {

inline std::vector<int> nonisolated(const Graph& g) {
  std::vector<int> vs;
  for (int v : g.vertices())
    if (g.degree(v) > 0) vs.push_back(v);
  return vs;
}

// Components of the complement restricted to `verts`; nullopt unless every
// component induces a clique in the complement (i.e. an independent set of
// size >= 1 in g), which characterizes complete multipartite graphs.
inline std::optional<std::vector<std::set<int>>> multipartite_parts(const Graph& g,
                                                                    const std::vector<int>& verts) {
  std::set<int> todo(verts.begin(), verts.end());
  std::vector<std::set<int>> parts;
  while (!todo.empty()) {
    std::set<int> comp;
    std::vector<int> frontier{*todo.begin()};
    todo.erase(todo.begin());
    comp.insert(frontier[0]);
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      std::vector<int> next;
      for (int w : todo)
        if (!g.has_edge(v, w)) next.push_back(w);
      for (int w : next) {
        todo.erase(w);
        comp.insert(w);
        frontier.push_back(w);
      }
    }
    parts.push_back(std::move(comp));
  }
  // Complement components must be complement-cliques: no edges inside, all
  // edges across.
  for (const auto& p : parts)
    for (int a : p)
      for (int b : p)
        if (a < b && g.has_edge(a, b)) return std::nullopt;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int a : parts[i])
        for (int b : parts[j])
          if (!g.has_edge(a, b)) return std::nullopt;
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

// Walks a path/cycle into vertex order; requires degrees <= 2.
inline std::optional<std::vector<int>> linear_order(const Graph& g, const std::vector<int>& verts,
                                                    bool cycle) {
  if (verts.size() < (cycle ? 3u : 2u)) return std::nullopt;
  std::size_t edge_count = 0;
  int start = -1;
  for (int v : verts) {
    const std::size_t d = g.degree(v);
    if (d > 2 || d == 0) return std::nullopt;
    edge_count += d;
    if (d == 1 && start < 0) start = v;
  }
  edge_count /= 2;
  if (cycle && (start >= 0 || edge_count != verts.size())) return std::nullopt;
  if (!cycle && (start < 0 || edge_count + 1 != verts.size())) return std::nullopt;
  std::vector<int> order;
  std::set<int> seen;
  int cur = cycle ? verts[0] : start;
  int prev = -1;
  while (true) {
    order.push_back(cur);
    seen.insert(cur);
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev && !seen.count(w)) next = w;
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (order.size() != verts.size()) return std::nullopt;  // disconnected
  return order;
}

inline bool is_tree(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty()) return false;
  std::size_t edges = 0;
  for (int v : verts) edges += g.degree(v);
  edges /= 2;
  if (edges + 1 != verts.size()) return false;
  // Connectivity over the non-isolated vertices.
  std::set<int> seen{verts[0]};
  std::vector<int> frontier{verts[0]};
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    for (int w : g.neighbors(v))
      if (seen.insert(w).second) frontier.push_back(w);
  }
  return seen.size() == verts.size();
}

}  // namespace detail

// Closed-form systems for the recognized graph classes, built on the graph's
// own vertex ids; isolated vertices are ignored. Complete m-partite covers
// complete graphs (all parts singletons) and stars (one part a singleton);
// singleton part sets are dropped since an SC on one vertex is a no-op.
inline std::optional<ScSystem> closed_form_for(const Graph& g) {
  const std::vector<int> verts = detail::nonisolated(g);
  if (verts.empty()) return make_system(g, {}, Provenance::closed_form);

  // A graph can match several classes (C4 is also K_{2,2}); keep the
  // smallest applicable form.
  std::vector<ScSystem> forms;

  bool complete = true;
  for (std::size_t i = 0; i < verts.size() && complete; ++i)
    for (std::size_t j = i + 1; j < verts.size() && complete; ++j)
      if (!g.has_edge(verts[i], verts[j])) complete = false;
  if (complete) {
    std::vector<std::set<int>> sets{std::set<int>(verts.begin(), verts.end())};
    forms.push_back(make_system(g, std::move(sets), Provenance::closed_form));
  } else if (auto parts = detail::multipartite_parts(g, verts)) {
    std::vector<std::set<int>> sets{std::set<int>(verts.begin(), verts.end())};
    for (const auto& p : *parts)
      if (p.size() >= 2) sets.push_back(p);
    forms.push_back(make_system(g, std::move(sets), Provenance::closed_form));
  }

  if (auto order = detail::linear_order(g, verts, /*cycle=*/false)) {
    std::vector<std::set<int>> sets;
    for (std::size_t i = 0; i + 1 < order->size(); ++i)
      sets.push_back({(*order)[i], (*order)[i + 1]});
    forms.push_back(make_system(g, std::move(sets), Provenance::closed_form));
  } else if (auto cyc = detail::linear_order(g, verts, /*cycle=*/true)) {
    // Triangle chain: {v0, vi, vi+1} for i in 1..k-2 reaches d = k-2.
    std::vector<std::set<int>> sets;
    for (std::size_t i = 1; i + 1 < cyc->size(); ++i)
      sets.push_back({(*cyc)[0], (*cyc)[i], (*cyc)[i + 1]});
    forms.push_back(make_system(g, std::move(sets), Provenance::closed_form));
  } else if (!complete && detail::is_tree(g, verts)) {
    // A tree with a vertex of degree >= 3 beats edge-wise via star
    // elimination (d <= n-2); paths were handled above.
    ScSystem sys = greedy_system(g);
    sys.provenance = Provenance::closed_form;
    forms.push_back(std::move(sys));
  }

  if (forms.empty()) return std::nullopt;
  return pick_best(std::move(forms));
}

// Closed form from a generator string such as complete:6 or bipartite:3,3.
inline ScSystem closed_form_system(const std::string& generator_spec) {
  const Graph g = make_graph(generator_spec);
  auto sys = closed_form_for(g);
  if (!sys) throw UnsupportedClass("no closed-form system for " + generator_spec);
  return *sys;
}

// --- Exact minimum search ---------------------------------------------------

namespace detail {

inline std::size_t rank_rows(std::vector<std::uint32_t> rows) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < 32 && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !((rows[pivot] >> c) & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> c) & 1u)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

// min over binary diagonals D of rank(R + D), on bitmask rows.
class ResidualMinRank {
 public:
  explicit ResidualMinRank(std::size_t m) : m_(m) {}

  std::size_t operator()(const std::vector<std::uint32_t>& rows) {
    auto it = memo_.find(rows);
    if (it != memo_.end()) return it->second;
    std::size_t best = m_;
    for (std::uint32_t d = 0; d < (1u << m_); ++d) {
      auto work = rows;
      for (std::size_t i = 0; i < m_; ++i)
        if ((d >> i) & 1u) work[i] ^= (1u << i);
      best = std::min(best, rank_rows(std::move(work)));
      if (best == 0) break;
    }
    memo_.emplace(rows, best);
    return best;
  }

 private:
  std::size_t m_;
  std::map<std::vector<std::uint32_t>, std::size_t> memo_;
};

// Depth-first search for d clique columns whose symmetric products match the
// residual off-diagonal. Branches on masks containing the lowest dirty
// vertex; equal-pivot branches ascend to kill permutation duplicates.
class ExactSearch {
 public:
  ExactSearch(std::vector<std::uint32_t> target, std::size_t m)
      : m_(m), minrank_(m), rows_(std::move(target)) {}

  bool run(std::size_t d, std::vector<std::uint32_t>& out) {
    out.clear();
    return dfs(d, 0, -1, out);
  }

 private:
  static void apply_clique(std::vector<std::uint32_t>& rows, std::uint32_t mask) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((mask >> i) & 1u) rows[i] ^= (mask & ~(std::uint32_t(1) << i));
  }

  bool dfs(std::size_t remaining, int prev_pivot, std::int64_t prev_mask,
           std::vector<std::uint32_t>& chosen) {
    int pivot = -1;
    for (std::size_t i = 0; i < m_; ++i)
      if (rows_[i]) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) return true;
    if (remaining == 0) return false;
    if (minrank_(rows_) > remaining) return false;

    const std::uint32_t all = (m_ >= 32 ? ~std::uint32_t(0) : (1u << m_) - 1);
    const std::uint32_t start =
        (pivot == prev_pivot && prev_mask >= 0) ? static_cast<std::uint32_t>(prev_mask) + 1 : 0;
    for (std::uint32_t mask = start; mask <= all; ++mask) {
      if (!((mask >> pivot) & 1u)) continue;
      if (std::popcount(mask) < 2) continue;
      apply_clique(rows_, mask);
      chosen.push_back(mask);
      if (dfs(remaining - 1, pivot, mask, chosen)) return true;
      chosen.pop_back();
      apply_clique(rows_, mask);
      if (mask == all) break;
    }
    return false;
  }

  std::size_t m_;
  ResidualMinRank minrank_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace detail

// Provably minimum-size system. Seeds the search at the GF(2) minimum rank
// and stops at mr+1, where a solution is guaranteed.
inline ScSystem exact_min_system(const Graph& g, const SolverLimits& limits = {}) {
  const std::vector<int> verts = detail::nonisolated(g);
  const std::size_t m = verts.size();
  if (m > limits.exact) throw SizeLimitExceeded("exact_min_system", m, limits.exact);
  if (m == 0) return make_system(g, {}, Provenance::exact);

  std::vector<std::uint32_t> target(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && g.has_edge(verts[i], verts[j])) target[i] |= (1u << j);

  BitMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((target[i] >> j) & 1u) a.set(i, j, true);
  const std::size_t mr = min_rank_f2(a, limits.min_rank).rank;

  for (std::size_t d = mr; d <= mr + 1; ++d) {
    detail::ExactSearch search(target, m);
    std::vector<std::uint32_t> cols;
    if (search.run(d, cols)) {
      std::vector<std::set<int>> sets;
      for (std::uint32_t mask : cols) {
        std::set<int> s;
        for (std::size_t i = 0; i < m; ++i)
          if ((mask >> i) & 1u) s.insert(verts[i]);
        sets.push_back(std::move(s));
      }
      return make_system(g, std::move(sets), Provenance::exact);
    }
  }
  throw Error("internal: no system found at mr+1, contradicting the dichotomy");
}

// --- Report -----------------------------------------------------------------

struct C2Report {
  int n = 0;
  std::size_t edges = 0;
  std::size_t lower = 0;          // mr(G, F2) when computable
  bool lower_is_min_rank = false;
  std::size_t upper = 0;          // best system size found
  std::optional<std::size_t> exact;
  std::optional<Rational> avg_schmidt_rank;
  ScSystem best;
};

inline C2Report c2_report(const Graph& g, const SolverLimits& limits = {}) {
  C2Report rep;
  const std::set<int> vs = g.vertices();
  rep.n = static_cast<int>(vs.size());
  rep.edges = g.edge_count();

  const std::vector<int> verts = detail::nonisolated(g);
  if (verts.size() <= limits.min_rank) {
    BitMatrix a(verts.size(), verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (g.has_edge(verts[i], verts[j])) {
          a.set(i, j, true);
          a.set(j, i, true);
        }
    rep.lower = min_rank_f2(a, limits.min_rank).rank;
    rep.lower_is_min_rank = true;
  } else {
    rep.lower = rep.edges > 0 ? 1 : 0;  // weak but honest fallback bound
  }

  std::vector<ScSystem> candidates;
  candidates.push_back(elimination_system(g));
  candidates.push_back(greedy_system(g));
  if (auto cf = closed_form_for(g)) candidates.push_back(std::move(*cf));
  if (verts.size() <= limits.exact) {
    candidates.push_back(exact_min_system(g, limits));
    rep.exact = candidates.back().size();
  }
  rep.best = pick_best(std::move(candidates));
  rep.upper = rep.best.size();

  if (vs.size() <= limits.cut_rank_avg) rep.avg_schmidt_rank = expected_cut_rank(g, limits.cut_rank_avg);

  // Structural guarantees; violations indicate an internal bug.
  if (rep.n >= 1 && rep.upper > static_cast<std::size_t>(rep.n) - 1 && rep.n > 1)
    throw Error("internal: upper bound exceeds n-1");
  if (rep.exact) {
    if (rep.lower_is_min_rank && (*rep.exact < rep.lower || *rep.exact > rep.lower + 1))
      throw Error("internal: exact size outside {mr, mr+1}");
    if (rep.avg_schmidt_rank && rep.edges >= 1 &&
        !(Rational::integer(static_cast<std::int64_t>(*rep.exact)) > *rep.avg_schmidt_rank))
      throw Error("internal: c2 does not exceed the average Schmidt rank");
  }
  return rep;
}

// Best available system under the given limits: exact when feasible, else
// the smallest of closed-form, elimination, and greedy.
inline ScSystem solve_auto(const Graph& g, const SolverLimits& limits = {}) {
  return c2_report(g, limits).best;
}

}  // namespace gsd
