#include "explore/generators.hpp"
#include "explore/opt.hpp"
#include "explore/strategies.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace explore;

namespace {

const QuadraticNumber kGolden = QuadraticNumber::parse("1/sqrt(2)-1");

std::vector<QuadraticNumber> deltas() {
  return {QuadraticNumber(-2),           QuadraticNumber(-1), QuadraticNumber(Rational(-1, 2)), kGolden,
          QuadraticNumber(0),            QuadraticNumber(Rational(1, 2)), QuadraticNumber(1),
          QuadraticNumber(2)};
}

std::vector<std::pair<VertexId, VertexId>> chosen_edges(const BlockingRun& run) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& ev : run.events) out.emplace_back(ev.chosen.from, ev.chosen.to);
  return out;
}

// Explicitly replays a tour and checks that no long edge is crossed as a
// boundary edge while another edge of its cycle is a boundary edge.
bool long_edges_crossed_last(const Graph& g, const Tour& t) {
  const auto parts = cycle_decomposition(g);
  std::vector<bool> visited(g.vertex_count(), false);
  visited[g.start()] = true;
  for (const auto& step : t.steps) {
    if (visited[step.to]) continue;
    const EdgeId id = *g.find_edge(step.from, step.to);
    if (const auto c = parts.cycle_of_edge[id]; c && long_edge(g, parts.cycles[*c]) == id) {
      for (EdgeId other : parts.cycles[*c].edges) {
        const Edge& e = g.edge(other);
        if (other != id && visited[e.u] != visited[e.v]) return false;
      }
    }
    visited[step.to] = true;
  }
  return true;
}

}  // namespace

TEST_CASE("is_blocked") {
  SUBCASE("l_1 is blocked by s_1 at the near end of l_1") {
    for (const Rational& delta : {Rational(-1, 2), Rational(0), Rational(1)}) {
      const auto d = gen_spiked_path(2, delta);
      Explorer state(d.graph);
      while (state.position() != d.named.at("l1.from")) {
        std::optional<BoundaryEdge> next;
        for (const auto& e : state.boundary_edges()) {
          if (e.from == state.position() && e.to < d.named.at("s1.tip") && (!next || e.to < next->to)) next = e;
        }
        REQUIRE(next.has_value());
        state.traverse(*next);
      }
      std::optional<BoundaryEdge> l1;
      for (const auto& e : state.boundary_edges()) {
        if (e.to == d.named.at("l1.to")) l1 = e;
      }
      REQUIRE(l1.has_value());
      const auto blocker = is_blocked(state, *l1, {QuadraticNumber(delta)});
      REQUIRE(blocker.has_value());
      CHECK(blocker->to == d.named.at("s1.tip"));
      // Any smaller delta would leave l_1 unblocked by s_1.
      const auto looser = is_blocked(state, *l1, {QuadraticNumber(delta - Rational(1, 1000))});
      CHECK((!looser || looser->to != d.named.at("s1.tip")));
    }
  }
  SUBCASE("the shortest boundary edge is never blocked") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = oracle::random_connected(10, 5, seed);
      Explorer state(g);
      while (!state.exploration_complete()) {
        const BoundaryEdge shortest = *state.boundary_edges().begin();
        for (const auto& delta : deltas()) CHECK_FALSE(is_blocked(state, shortest, {delta}).has_value());
        state.walk(shortest.from);
        state.traverse(shortest);
      }
    }
  }
  SUBCASE("delta > 0 blocks a long edge while its cycle has another boundary edge") {
    const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 3}}, 0);
    Explorer state(g);
    const BoundaryEdge long_one{0, 2, 3};
    CHECK(is_blocked(state, long_one, {QuadraticNumber(Rational(1, 2))}).has_value());
    CHECK(is_blocked(state, long_one, {QuadraticNumber(Rational(1, 1000))}).has_value());
  }
}

TEST_CASE("Blocking matches a direct transcription of the algorithm") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = oracle::random_connected(3 + seed % 10, seed % 7, 700 + seed, 6);
    for (const auto& delta : deltas()) {
      oracle::ReferenceBlocking ref(g, delta);
      ref.run();
      const auto run = run_blocking(g, {delta});
      CHECK(run.tour.total_cost == ref.cost);
      CHECK(chosen_edges(run) == ref.traversals);
    }
  }
}

TEST_CASE("Blocking examples") {
  SUBCASE("single edge") {
    const Graph g(2, {{0, 1, Rational(3, 2)}}, 0);
    const auto run = run_blocking(g, {QuadraticNumber(0)});
    REQUIRE(run.tour.steps.size() == 2);
    CHECK(run.tour.steps[0] == Step{0, 1, Rational(3, 2)});
    CHECK(run.tour.steps[1] == Step{1, 0, Rational(3, 2)});
    CHECK(run.tour.total_cost == 3);
    CHECK(run.complete);
  }
  SUBCASE("planar family costs at least 2m^2 for delta in {0, -1/2}") {
    for (int m = 1; m <= 8; ++m) {
      for (const Rational& delta : {Rational(0), Rational(-1, 2)}) {
        const auto run = run_blocking(gen_planar_lower(m).graph, {QuadraticNumber(delta)});
        CHECK(run.tour.total_cost >= 2 * m * m);
      }
    }
  }
  SUBCASE("spiked path charges (4+2delta)|l_i| to each long edge but the last") {
    for (const Rational& delta : {Rational(-1, 2), Rational(0), Rational(1, 2)}) {
      const int m = 4;
      const auto d = gen_double_sp(m, delta);
      const auto run = run_blocking(d.graph, {QuadraticNumber(delta)});
      for (int i = 1; i <= m; ++i) {
        const std::string li = "sp1.l" + std::to_string(i);
        const EdgeId e = *d.graph.find_edge(d.named.at(li + ".from"), d.named.at(li + ".to"));
        CHECK(run.ledger[e] == (4 + 2 * delta) * d.graph.edge(e).weight);
      }
    }
  }
  SUBCASE("block records name the blocker's tip") {
    const auto d = gen_spiked_path(2, Rational(-1, 2));
    const auto run = run_blocking(d.graph, {QuadraticNumber(Rational(-1, 2))});
    bool found = false;
    for (const auto& r : run.block_records) {
      found |= r.blocked_edge.to == d.named.at("l1.to") && r.blocker_tip == d.named.at("s1.tip");
    }
    CHECK(found);
  }
}

TEST_CASE("Blocking invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph general = oracle::random_connected(4 + seed % 15, seed % 9, 900 + seed);
    const auto cactus = gen_random({RandomFamily::Cactus, 5 + seed % 20, 40 + seed, 80, 2});
    for (const Graph* g : {&general, &cactus.graph}) {
      const bool is_cactus = classify(*g) != GraphClass::General;
      for (const auto& delta : deltas()) {
        const auto run = run_blocking(*g, {delta});
        CHECK(run.complete);
        CHECK(run.tour.closed);
        CHECK(run.audit.ok());
        Rational ledger = 0;
        for (EdgeId e = 0; e < g->edge_count(); ++e) {
          ledger += run.ledger[e];
          CHECK(run.charge_counts[e] <= 1);
          if (delta > QuadraticNumber(-1)) {
            const QuadraticNumber cap = (QuadraticNumber(4) + QuadraticNumber(2) * delta) * QuadraticNumber(g->edge(e).weight);
            CHECK(QuadraticNumber(run.ledger[e]) <= cap);
          }
        }
        CHECK(ledger == run.tour.total_cost);
        if (is_cactus && delta.sign() > 0) CHECK(long_edges_crossed_last(*g, run.tour));
      }
    }
  }
}

TEST_CASE("audit can be switched off") {
  const auto d = gen_double_sp(2, Rational(1));
  const auto run = run_blocking(d.graph, {QuadraticNumber(1)}, {false});
  CHECK_FALSE(run.audit.enabled);
  CHECK(run.audit.long_edge_evaluations == 0);
  CHECK(run.complete);
}

TEST_CASE("event log") {
  const auto d = gen_gk(1);
  const auto run = run_blocking(d.graph, {QuadraticNumber(0)});
  std::ostringstream out;
  write_event_log(out, run);
  CHECK(out.str() ==
        "iter 0 depth 0 at 0 edge 0 1 1/1 walk_in 0/1 walk_out 1/1 charge 2/1 evals 0-1:open\n"
        "iter 1 depth 1 at 1 edge 1 2 1/1 walk_in 0/1 walk_out 1/1 charge 2/1 evals 1-2:open\n");
}

TEST_CASE("nearest neighbor") {
  SUBCASE("G_k cost formula") {
    for (int k = 1; k <= 8; ++k) {
      const Tour t = run_nn(gen_gk(k).graph);
      CHECK(t.total_cost == Rational(k + 2) * Rational(Integer(1) << k) - 2);
      CHECK(t.closed);
    }
  }
  SUBCASE("path of two unit edges") {
    const Graph g(3, {{0, 1, 1}, {1, 2, 1}}, 0);
    CHECK(run_nn(g).total_cost == 4);
  }
  SUBCASE("every step goes to a nearest known vertex") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto tree = gen_random({RandomFamily::Tree, 2 + seed % 9, seed});
      CHECK(oracle::check_nn_tour(tree.graph, run_nn(tree.graph)) == "");
      const Graph g = oracle::random_connected(3 + seed % 12, seed % 8, 300 + seed);
      CHECK(oracle::check_nn_tour(g, run_nn(g)) == "");
    }
    for (int k = 1; k <= 5; ++k) {
      const auto d = gen_gk(k);
      CHECK(oracle::check_nn_tour(d.graph, run_nn(d.graph)) == "");
    }
  }
}

TEST_CASE("depth-first search") {
  SUBCASE("trees cost twice their weight") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto d = gen_random({RandomFamily::Tree, 1 + seed % 25, seed});
      CHECK(run_dfs(d.graph).total_cost == 2 * d.graph.total_weight());
    }
    CHECK(run_dfs(gen_gk(1).graph).total_cost == 4);
  }
  SUBCASE("identical to Blocking with delta <= -1") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Graph g = oracle::random_connected(2 + seed % 14, seed % 6, 1200 + seed);
      const Tour dfs = run_dfs(g);
      for (const auto& delta : {QuadraticNumber(-1), QuadraticNumber(-3)}) {
        const auto run = run_blocking(g, {delta});
        CHECK(run.tour.steps == dfs.steps);
      }
    }
  }
}

TEST_CASE("every strategy closes its tour above the optimum") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = oracle::random_connected(2 + seed % 9, seed % 5, 1500 + seed);
    const Rational opt = opt_exact(g).length;
    for (const Tour& t : {run_nn(g), run_dfs(g)}) {
      CHECK(t.closed);
      CHECK(t.total_cost >= opt);
    }
    for (const auto& delta : deltas()) {
      const auto run = run_blocking(g, {delta});
      CHECK(run.complete);
      CHECK(run.tour.total_cost >= opt);
    }
  }
}
