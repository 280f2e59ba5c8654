#include "explore/errors.hpp"
#include "explore/generators.hpp"
#include "explore/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace explore;

namespace {

Graph cycle_graph(std::vector<int> weights) {
  std::vector<Edge> edges;
  const auto n = static_cast<VertexId>(weights.size());
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, weights[i]});
  return Graph(n, std::move(edges), 0);
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_NOTHROW(Graph(1, {}, 0));
  CHECK_THROWS_AS(Graph(0, {}, 0), InvalidGraph);
  CHECK_THROWS_AS(Graph(2, {}, 0), InvalidGraph);                                  // disconnected
  CHECK_THROWS_AS(Graph(2, {{0, 0, 1}, {0, 1, 1}}, 0), InvalidGraph);              // self-loop
  CHECK_THROWS_AS(Graph(2, {{0, 1, 1}, {1, 0, 2}}, 0), InvalidGraph);              // parallel
  CHECK_THROWS_AS(Graph(2, {{0, 1, 0}}, 0), InvalidGraph);                         // zero weight
  CHECK_THROWS_AS(Graph(2, {{0, 1, Rational(-1, 2)}}, 0), InvalidGraph);           // negative weight
  CHECK_THROWS_AS(Graph(2, {{0, 1, 1}}, 2), InvalidGraph);                         // start missing
  CHECK_THROWS_AS(Graph(2, {{0, 5, 1}}, 0), InvalidGraph);                         // unknown endpoint
}

TEST_CASE("incidences are sorted by neighbor") {
  const Graph g(4, {{0, 3, 1}, {0, 1, 2}, {0, 2, 3}}, 0);
  const auto inc = g.incidences(0);
  REQUIRE(inc.size() == 3);
  CHECK(inc[0].neighbor == 1);
  CHECK(inc[1].neighbor == 2);
  CHECK(inc[2].neighbor == 3);
  CHECK(g.find_edge(2, 0).has_value());
  CHECK_FALSE(g.find_edge(1, 2).has_value());
  CHECK(g.total_weight() == 6);
}

TEST_CASE("classify") {
  CHECK(classify(gen_gk(1).graph) == GraphClass::Tree);
  CHECK(classify(Graph(1, {}, 0)) == GraphClass::Tree);
  CHECK(classify(gen_sp_cycle(2, Rational(-1, 2)).graph) == GraphClass::Unicyclic);
  CHECK(classify(cycle_graph({1, 1, 1})) == GraphClass::Unicyclic);
  // Two triangles sharing a vertex.
  const Graph bowtie(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 1}, {3, 4, 1}, {4, 0, 1}}, 0);
  CHECK(classify(bowtie) == GraphClass::Cactus);
  CHECK(classify(gen_planar_lower(3).graph) == GraphClass::General);
  // K4 has edges on several cycles.
  const Graph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, 0);
  CHECK(classify(k4) == GraphClass::General);
}

TEST_CASE("cycle decomposition") {
  SUBCASE("trees have only bridges") {
    const auto parts = cycle_decomposition(gen_gk(3).graph);
    CHECK(parts.cycles.empty());
    CHECK(parts.bridges.size() == 14);
  }
  SUBCASE("sp-cycle is a single cycle through both hub edges") {
    const auto d = gen_sp_cycle(2, Rational(-1, 2));
    const auto parts = cycle_decomposition(d.graph);
    REQUIRE(parts.cycles.size() == 1);
    const auto& c = parts.cycles[0];
    const VertexId hub = d.named.at("hub");
    CHECK(std::count(c.vertices.begin(), c.vertices.end(), hub) == 1);
    CHECK(std::count(c.vertices.begin(), c.vertices.end(), d.named.at("entry")) == 1);
    CHECK(std::count(c.vertices.begin(), c.vertices.end(), d.named.at("exit")) == 1);
    // Spikes hang off the cycle as bridges.
    CHECK(parts.bridges.size() == 2);
    Rational sum = 0;
    for (EdgeId e : c.edges) sum += d.graph.edge(e).weight;
    CHECK(sum == c.total_length);
  }
  SUBCASE("general graphs are rejected") {
    CHECK_THROWS_AS(cycle_decomposition(gen_planar_lower(2).graph), UnsupportedGraphClass);
  }
  SUBCASE("cycles close and partition the edges") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto d = gen_random({RandomFamily::Cactus, 5 + seed % 20, seed});
      const auto parts = cycle_decomposition(d.graph);
      std::size_t covered = parts.bridges.size();
      std::vector<int> seen(d.graph.edge_count(), 0);
      for (EdgeId b : parts.bridges) ++seen[b];
      for (const auto& c : parts.cycles) {
        covered += c.edges.size();
        REQUIRE(c.vertices.size() == c.edges.size());
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
          ++seen[c.edges[i]];
          const Edge& e = d.graph.edge(c.edges[i]);
          const VertexId a = c.vertices[i], b = c.vertices[(i + 1) % c.vertices.size()];
          CHECK(((e.u == a && e.v == b) || (e.u == b && e.v == a)));
        }
      }
      CHECK(covered == d.graph.edge_count());
      CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
  }
}

TEST_CASE("long edge") {
  auto single = [](std::vector<int> w) {
    const Graph g = cycle_graph(w);
    const auto parts = cycle_decomposition(g);
    return std::pair{g, long_edge(g, parts.cycles.at(0))};
  };
  CHECK_FALSE(single({1, 1, 1}).second.has_value());
  {
    auto [g, e] = single({1, 1, 3});
    REQUIRE(e.has_value());
    CHECK(g.edge(*e).weight == 3);
  }
  CHECK_FALSE(single({1, 1, 2}).second.has_value());
  // At most one edge can exceed half, and then 2(|C| - |e|) < |C|.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto d = gen_random({RandomFamily::Cactus, 12, seed, 40, 1});
    const auto parts = cycle_decomposition(d.graph);
    for (const auto& c : parts.cycles) {
      int above_half = 0;
      for (EdgeId e : c.edges) above_half += 2 * d.graph.edge(e).weight > c.total_length;
      const auto le = long_edge(d.graph, c);
      CHECK(above_half == (le ? 1 : 0));
      if (le) CHECK(2 * (c.total_length - d.graph.edge(*le).weight) < c.total_length);
    }
  }
}

TEST_CASE("shortest path") {
  SUBCASE("G_k endpoints") {
    for (int k = 1; k <= 8; ++k) {
      const auto d = gen_gk(k);
      CHECK(shortest_path(d.graph, d.named.at("l_k"), d.named.at("r_k")).length ==
            Rational((Integer(1) << (k + 1)) - k - 2));
    }
  }
  SUBCASE("same vertex") {
    const auto r = shortest_path(gen_gk(2).graph, 3, 3);
    CHECK(r.length == 0);
    CHECK(r.path == std::vector<VertexId>{3});
  }
  SUBCASE("lexicographic tie-break") {
    // Two equal routes 0-1-3 and 0-2-3.
    const Graph g(4, {{0, 2, 1}, {2, 3, 1}, {0, 1, 1}, {1, 3, 1}}, 0);
    CHECK(shortest_path(g, 0, 3).path == std::vector<VertexId>{0, 1, 3});
    CHECK(shortest_path(g, 3, 0).path == std::vector<VertexId>{3, 1, 0});
  }
  SUBCASE("matches exhaustive path enumeration") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const std::size_t n = 2 + seed % 7;
      const Graph g = oracle::random_connected(n, seed % 5, seed, 4);
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          const auto fast = shortest_path(g, u, v);
          const auto [len, path] = oracle::brute_shortest(g, u, v);
          CHECK(fast.length == len);
          CHECK(fast.path == path);
        }
      }
    }
  }
  SUBCASE("symmetry and triangle inequality") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Graph g = oracle::random_connected(9, 6, 100 + seed);
      const std::size_t n = g.vertex_count();
      std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) d[u][v] = shortest_path(g, u, v).length;
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b) {
          CHECK(d[a][b] == d[b][a]);
          for (VertexId c = 0; c < n; ++c) CHECK(d[a][c] <= d[a][b] + d[b][c]);
        }
    }
  }
}

TEST_CASE("text format round trip") {
  const auto d = gen_spiked_path(3, Rational(-1, 2));
  const std::string text = format_graph(d.graph);
  const Graph back = parse_graph(text);
  CHECK(back == d.graph);
  CHECK(format_graph(back) == text);

  const Graph g = parse_graph("# comment\n\ngraph 3 2 1\nedge 0 1 2/4\n# inner\nedge 2 1 3/1\n");
  CHECK(g.start() == 1);
  CHECK(g.edge(0).weight == Rational(1, 2));
  CHECK(format_graph(g) == "graph 3 2 1\nedge 0 1 1/2\nedge 2 1 3/1\n");
}

TEST_CASE("text format errors") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2 1 0\n"), ParseError);                       // missing edge
  CHECK_THROWS_AS(parse_graph("graph 2 1 0\nedge 0 1 1\nedge 0 1 1\n"), ParseError);  // too many
  CHECK_THROWS_AS(parse_graph("graph 2 1 0\nedge 0 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2 1 0\nedge 0 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("grph 2 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2 1 0\nedge 0 1 0/1\n"), InvalidGraph);
}
