#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "gsd/solver.hpp"

using namespace gsd;

namespace {

// Fully naive breadth-first oracle: enumerate systems by size until one
// replays to the target. Graphs must live on contiguous ids, n <= 5.
struct EdgeMaskCodec {
  int n;
  std::vector<std::uint32_t> clique_mask;  // per vertex-subset mask
  explicit EdgeMaskCodec(int n_) : n(n_), clique_mask(std::size_t(1) << n_, 0) {
    for (std::uint32_t s = 0; s < clique_mask.size(); ++s) {
      std::uint32_t em = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (((s >> i) & 1u) && ((s >> j) & 1u)) em |= edge_bit(i, j);
      clique_mask[s] = em;
    }
  }
  std::uint32_t edge_bit(int i, int j) const {
    int idx = 0, k = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++k)
        if (a == i && b == j) idx = k;
    return 1u << idx;
  }
  std::uint32_t encode(const Graph& g) const {
    std::uint32_t em = 0;
    for (auto [u, v] : g.edges()) em |= edge_bit(u, v);
    return em;
  }
};

bool bfs_extend(const EdgeMaskCodec& codec, std::uint32_t residual, std::uint32_t min_subset,
                int remaining) {
  if (residual == 0) return true;
  if (remaining == 0) return false;
  for (std::uint32_t s = min_subset; s < codec.clique_mask.size(); ++s) {
    if (std::popcount(s) < 2) continue;
    if (bfs_extend(codec, residual ^ codec.clique_mask[s], s + 1, remaining - 1)) return true;
  }
  return false;
}

std::size_t bfs_c2(const Graph& g) {
  EdgeMaskCodec codec(static_cast<int>(g.vertex_count()));
  const std::uint32_t target = codec.encode(g);
  for (std::size_t d = 0;; ++d)
    if (bfs_extend(codec, target, 0, static_cast<int>(d))) return d;
}

}  // namespace

TEST_CASE("replay basics") {
  ScSystem empty;
  empty.n = 4;
  CHECK(replay(empty) == Graph(4));

  ScSystem whole;
  whole.n = 5;
  whole.sets = {{0, 1, 2, 3, 4}};
  CHECK(replay(whole) == complete_graph(5));

  ScSystem w5;
  w5.n = 5;
  w5.sets = {{0, 1, 3, 4}, {1, 2, 3}, {0, 2, 4}};
  Graph rebuilt = replay(w5);
  CHECK(rebuilt.edge_count() == 8);
  CHECK(rebuilt.degree(2) == 4);  // hub of the figure's W5 labeling
}

TEST_CASE("trivial system is one pair per edge") {
  CHECK(trivial_system(complete_graph(3)).size() == 3);
  CHECK(trivial_system(Graph(4)).size() == 0);
  CHECK(trivial_system(wheel_graph(5)).size() == 8);
}

TEST_CASE("closed-form sizes match the cost table") {
  CHECK(closed_form_system("complete:6").size() == 1);
  CHECK(closed_form_system("bipartite:3,3").size() == 3);
  CHECK(closed_form_system("mpartite:2,2,2").size() == 4);
  CHECK(closed_form_system("star:5").size() == 2);
  for (int n = 2; n <= 12; ++n)
    CHECK(closed_form_system("path:" + std::to_string(n)).size() == std::size_t(n - 1));
  for (int n = 3; n <= 12; ++n)
    CHECK(closed_form_system("cycle:" + std::to_string(n)).size() == std::size_t(n - 2));
  CHECK_THROWS_AS(closed_form_system("wheel:5"), UnsupportedClass);
  CHECK_THROWS_AS(closed_form_system("gnp:8,0.5,1"), UnsupportedClass);
}

TEST_CASE("closed form for a non-path tree stays at or below n-2") {
  // Spider: center 0 with three legs of length 2.
  Graph t(7);
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  t.add_edge(0, 3);
  t.add_edge(3, 4);
  t.add_edge(0, 5);
  t.add_edge(5, 6);
  auto sys = closed_form_for(t);
  REQUIRE(sys.has_value());
  CHECK(sys->provenance == Provenance::closed_form);
  CHECK(sys->size() <= 5);
}

TEST_CASE("closed form detection ignores isolated vertices") {
  Graph g = bipartite_graph(3, 3);
  // Strip vertex 0's edges, as the distribution protocol does for the hub.
  const std::set<int> nbs = g.neighbors(0);
  for (int w : nbs) g.toggle_edge(0, w);
  auto sys = closed_form_for(g);
  REQUIRE(sys.has_value());
  CHECK(sys->size() == 3);  // K_{2,3} closed form
  CHECK(replays_to(*sys, g));
}

TEST_CASE("greedy system examples") {
  SECTION("star") {
    auto sys = greedy_system(star_graph(5));
    REQUIRE(sys.size() == 2);
    CHECK(sys.sets[0] == std::set<int>{0, 1, 2, 3, 4});
    CHECK(sys.sets[1] == std::set<int>{1, 2, 3, 4});
  }
  SECTION("single edge") {
    auto sys = greedy_system(path_graph(2));
    REQUIRE(sys.size() == 1);
    CHECK(sys.sets[0].size() == 2);
  }
  SECTION("cliques stay under twice the trivial vertex-cover bound") {
    for (int n = 3; n <= 9; ++n) {
      auto sys = greedy_system(complete_graph(n));
      CHECK(sys.size() <= 2 * std::size_t(n - 1));
    }
  }
  SECTION("replay correctness on random graphs") {
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = random_graph(2 + static_cast<int>(rng.below(11)), 0.4, rng.next_u64());
      auto sys = greedy_system(g);
      CHECK(replays_to(sys, g));
      CHECK(sys.size() <= 2 * g.edge_count() + 1);
    }
  }
}

TEST_CASE("elimination system stays below n and replays") {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(11));
    Graph g = random_graph(n, 0.6, rng.next_u64());
    auto sys = elimination_system(g);
    CHECK(replays_to(sys, g));
    CHECK(sys.size() <= std::size_t(n - 1));
  }
}

TEST_CASE("exact minimum sizes for the named instances") {
  CHECK(exact_min_system(wheel_graph(5)).size() == 3);
  CHECK(exact_min_system(path_graph(4)).size() == 3);
  CHECK(exact_min_system(cycle_graph(5)).size() == 3);
  CHECK(exact_min_system(Graph(4)).size() == 0);
  CHECK(exact_min_system(complete_graph(8)).size() == 1);
  CHECK_THROWS_AS(exact_min_system(random_graph(9, 0.9, 1)), SizeLimitExceeded);
}

TEST_CASE("exact search equals the naive breadth-first oracle on all graphs n<=5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t em = 0; em < (1u << pairs); ++em) {
      Graph g(n);
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
          if ((em >> k) & 1u) g.add_edge(i, j);
      const auto exact = exact_min_system(g);
      REQUIRE(replays_to(exact, g));
      if (exact.size() != bfs_c2(g)) {
        FAIL("exact size mismatch at n=" << n << " edges=" << em);
      }
    }
  }
}

TEST_CASE("exact size sits in {mr, mr+1} and respects bounds on random graphs") {
  Rng rng(57);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));  // 4..7
    Graph g = random_graph(n, 0.5, rng.next_u64());
    auto rep = c2_report(g);
    REQUIRE(rep.exact.has_value());
    CHECK(rep.lower <= *rep.exact);
    CHECK(*rep.exact <= rep.lower + 1);
    CHECK(*rep.exact <= rep.upper);
    CHECK(rep.upper <= std::size_t(n - 1));
    CHECK(greedy_system(g).size() >= *rep.exact);
    if (g.edge_count() >= 1) {
      REQUIRE(rep.avg_schmidt_rank.has_value());
      CHECK(Rational::integer(static_cast<std::int64_t>(*rep.exact)) > *rep.avg_schmidt_rank);
    }
  }
}

TEST_CASE("c2 report for cliques and the empty graph") {
  auto rep = c2_report(complete_graph(6));
  REQUIRE(rep.exact.has_value());
  CHECK(*rep.exact == 1);
  CHECK(rep.upper == 1);
  CHECK(rep.avg_schmidt_rank == Rational(62, 64));

  auto empty = c2_report(Graph(5));
  CHECK(empty.upper == 0);
  CHECK(empty.exact.has_value());
  CHECK(*empty.exact == 0);
  CHECK(empty.avg_schmidt_rank == Rational(0, 1));
}

TEST_CASE("system text round trip") {
  auto sys = exact_min_system(wheel_graph(5));
  const std::string text = format_system_text(sys);
  std::istringstream in(text);
  auto back = parse_system_text(in);
  CHECK(back.n == sys.n);
  CHECK(back.sets == sys.sets);
  CHECK(replay(back) == wheel_graph(5));

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(parse_system_text(bad), ParseError);
}
