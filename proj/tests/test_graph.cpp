#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "gsd/graph.hpp"

using namespace gsd;

TEST_CASE("apply_cz toggles a single edge") {
  Graph g = complete_graph(2);
  g.apply_cz(0, 1);
  CHECK(g == Graph(2));
  g.apply_cz(0, 1);
  CHECK(g == complete_graph(2));
  g.apply_cz(0, 1);
  g.apply_cz(0, 1);
  CHECK(g == complete_graph(2));
  CHECK_THROWS_AS(g.apply_cz(0, 0), SelfLoop);
  CHECK_THROWS_AS(g.apply_cz(0, 7), UnknownVertex);
}

TEST_CASE("local complement examples") {
  SECTION("degree-1 vertex leaves the graph unchanged") {
    Graph g = path_graph(2);
    Graph before = g;
    g.local_complement(0);
    CHECK(g == before);
  }
  SECTION("center of K_{1,3} yields K4") {
    Graph g = star_graph(4);
    g.local_complement(0);
    CHECK(g == complete_graph(4));
  }
  SECTION("triangle vertex yields a path") {
    Graph g = complete_graph(3);
    g.local_complement(0);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(0, 2);
    CHECK(g == p3);
  }
}

TEST_CASE("local complement is an involution") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(8, 0.5, rng.next_u64());
    Graph before = g;
    const int v = static_cast<int>(rng.below(8));
    g.local_complement(v);
    g.local_complement(v);
    CHECK(g == before);
  }
}

TEST_CASE("an LC equals an SC on the open neighborhood") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(7, 0.5, rng.next_u64());
    const int v = static_cast<int>(rng.below(7));
    Graph a = g, b = g;
    a.local_complement(v);
    b.subgraph_complement(b.neighbors(v));
    CHECK(a == b);
  }
}

TEST_CASE("subgraph complement basics") {
  SECTION("on the empty graph it adds a clique") {
    Graph g(5);
    g.subgraph_complement({0, 2, 4});
    Graph want(5);
    want.add_edge(0, 2);
    want.add_edge(0, 4);
    want.add_edge(2, 4);
    CHECK(g == want);
  }
  SECTION("applying the same set twice is the identity") {
    Rng rng(7);
    Graph g = random_graph(8, 0.4, rng.next_u64());
    Graph before = g;
    g.subgraph_complement({1, 3, 5, 6});
    g.subgraph_complement({1, 3, 5, 6});
    CHECK(g == before);
  }
  SECTION("the W5 system from the wheel figure") {
    Graph g(5);
    g.subgraph_complement({0, 1, 3, 4});
    g.subgraph_complement({1, 2, 3});
    g.subgraph_complement({0, 2, 4});
    // Wheel on 5 vertices with hub 2 and rim 0-1-4-3-0.
    Graph w5(5);
    for (int rim : {0, 1, 3, 4}) w5.add_edge(2, rim);
    w5.add_edge(0, 1);
    w5.add_edge(1, 4);
    w5.add_edge(4, 3);
    w5.add_edge(3, 0);
    CHECK(g == w5);
    CHECK(g.edge_count() == 8);
  }
}

TEST_CASE("subgraph complement operations commute") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(8, 0.5, rng.next_u64());
    std::vector<std::set<int>> system;
    const int d = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < d; ++i) {
      std::set<int> s;
      while (s.size() < 2) s.insert(static_cast<int>(rng.below(8)));
      if (rng.coin()) s.insert(static_cast<int>(rng.below(8)));
      system.push_back(s);
    }
    Graph forward = g, backward = g;
    for (const auto& s : system) forward.subgraph_complement(s);
    for (auto it = system.rbegin(); it != system.rend(); ++it) backward.subgraph_complement(*it);
    CHECK(forward == backward);
  }
}

TEST_CASE("measurements on the graph") {
  SECTION("Z-measuring a triangle vertex leaves K2") {
    Graph g = complete_graph(3);
    auto rec = g.measure(0, MeasBasis::Z);
    CHECK(rec.vertex == 0);
    CHECK(!rec.companion_lc.has_value());
    Graph k2_on_12(0);
    k2_on_12.add_vertex(1);
    k2_on_12.add_vertex(2);
    k2_on_12.add_edge(1, 2);
    CHECK(g == k2_on_12);
  }
  SECTION("Y-measuring the middle of a path connects the ends") {
    Graph g = path_graph(3);
    auto rec = g.measure(1, MeasBasis::Y);
    CHECK(rec.companion_lc == 1);
    Graph want(0);
    want.add_vertex(0);
    want.add_vertex(2);
    want.add_edge(0, 2);
    CHECK(g == want);
  }
  SECTION("Z-measuring an isolated vertex only removes it") {
    Graph g(3);
    g.add_edge(1, 2);
    g.measure(0, MeasBasis::Z);
    CHECK(g.vertex_count() == 2);
    CHECK(g.has_edge(1, 2));
  }
  SECTION("measured ids are retired") {
    Graph g = path_graph(3);
    g.measure(1, MeasBasis::Z);
    CHECK_THROWS_AS(g.measure(1, MeasBasis::Z), UnknownVertex);
  }
}

TEST_CASE("adjacency matrices are symmetric with zero diagonal") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(9, 0.5, rng.next_u64());
    CHECK(g.adjacency_matrix().is_symmetric_zero_diagonal());
  }
}

TEST_CASE("random graph generator") {
  CHECK(random_graph(6, 0.0, 3) == Graph(6));
  CHECK(random_graph(6, 1.0, 3) == complete_graph(6));
  CHECK(random_graph(10, 0.37, 99) == random_graph(10, 0.37, 99));
}

TEST_CASE("graph text format round trip") {
  Graph g = wheel_graph(5);
  std::istringstream in(format_graph_text(g));
  CHECK(parse_graph_text(in) == g);

  std::istringstream bad("3\n0 3\n");
  CHECK_THROWS_AS(parse_graph_text(bad), ParseError);
}

TEST_CASE("generator strings") {
  CHECK(make_graph("complete:4") == complete_graph(4));
  CHECK(make_graph("bipartite:2,3") == bipartite_graph(2, 3));
  CHECK(make_graph("mpartite:2,2,2") == multipartite_graph({2, 2, 2}));
  CHECK(make_graph("path:5") == path_graph(5));
  CHECK(make_graph("cycle:5") == cycle_graph(5));
  CHECK(make_graph("star:5") == star_graph(5));
  CHECK(make_graph("wheel:5") == wheel_graph(5));
  CHECK(make_graph("gnp:7,0.5,3") == random_graph(7, 0.5, 3));
  CHECK_THROWS_AS(make_graph("torus:3"), ParseError);
  CHECK_THROWS_AS(make_graph("complete"), ParseError);
}
