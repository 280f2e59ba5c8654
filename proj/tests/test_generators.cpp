#include "explore/errors.hpp"
#include "explore/generators.hpp"
#include "explore/opt.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <sstream>

using namespace explore;

namespace {

std::map<Rational, int> weight_histogram(const Graph& g) {
  std::map<Rational, int> h;
  for (const Edge& e : g.edges()) ++h[e.weight];
  return h;
}

}  // namespace

TEST_CASE("gk small cases") {
  const auto g1 = gen_gk(1);
  CHECK(g1.graph.vertex_count() == 3);
  CHECK(weight_histogram(g1.graph) == std::map<Rational, int>{{1, 2}});
  CHECK(g1.graph.start() == g1.named.at("l_k"));

  const auto g3 = gen_gk(3);
  CHECK(g3.graph.vertex_count() == 15);
  CHECK(weight_histogram(g3.graph) == std::map<Rational, int>{{1, 11}, {2, 2}, {3, 1}});
  CHECK(classify(g3.graph) == GraphClass::Tree);

  const auto g5 = gen_gk(5);
  CHECK(g5.predictions.at("nn_cost") == 222);
  CHECK(g5.predictions.at("opt") == 176);
  CHECK(g5.predictions.at("n") == 63);
  CHECK(g5.predictions.at("w_k") == 88);
  CHECK(g5.predictions.at("p_k") == 57);
  CHECK_THROWS_AS(gen_gk(0), std::invalid_argument);
}

TEST_CASE("gk satisfies its recurrences") {
  Rational w = 2, p = 1;
  for (int k = 1; k <= 9; ++k) {
    if (k > 1) {
      w = 2 * w + k + 1;
      p = 2 * p + k;
    }
    const auto d = gen_gk(k);
    CHECK(d.graph.total_weight() == w);
    CHECK(d.predictions.at("w_k") == w);
    CHECK(d.predictions.at("p_k") == p);
    CHECK(shortest_path(d.graph, d.named.at("l_k"), d.named.at("r_k")).length == p);
    CHECK(d.graph.vertex_count() == (std::size_t(1) << (k + 1)) - 1);
  }
}

TEST_CASE("spiked path lengths") {
  const auto d = gen_spiked_path(3, Rational(-1, 2));
  CHECK(d.predictions.at("k") == 2);
  CHECK(d.graph.edge(*d.graph.find_edge(d.named.at("l1.from"), d.named.at("l1.to"))).weight == 2);
  CHECK(d.graph.edge(*d.graph.find_edge(d.named.at("l2.from"), d.named.at("l2.to"))).weight == 8);
  CHECK(d.graph.edge(*d.graph.find_edge(d.named.at("l3.from"), d.named.at("l3.to"))).weight == 26);
  CHECK(d.predictions.at("l_total") == 36);
  CHECK(d.graph.start() == d.named.at("entry"));
  CHECK(classify(d.graph) == GraphClass::Tree);

  for (const Rational& delta : {Rational(-3, 4), Rational(0), Rational(1, 3), Rational(2)}) {
    for (int m = 1; m <= 6; ++m) {
      const auto sp = gen_spiked_path(m, delta);
      const int k = static_cast<int>(sp.predictions.at("k").convert_to<double>());
      CHECK(Rational(k) >= Rational(1) + delta + 1);
      Rational l_sum = 0;
      for (int i = 1; i <= m; ++i) {
        const auto id = sp.graph.find_edge(sp.named.at("l" + std::to_string(i) + ".from"),
                                           sp.named.at("l" + std::to_string(i) + ".to"));
        REQUIRE(id.has_value());
        const Rational len = sp.graph.edge(*id).weight;
        CHECK(len * (1 + delta) >= i);
        CHECK(len * (1 + delta) == i + l_sum);
        l_sum += len;
        const auto tip = sp.named.at("s" + std::to_string(i) + ".tip");
        CHECK(sp.graph.incidences(tip).size() == 1);
        CHECK(sp.graph.edge(sp.graph.incidences(tip)[0].edge).weight == Rational(1, k));
      }
      CHECK(sp.graph.total_weight() - l_sum == sp.predictions.at("non_l_total"));
      CHECK(sp.predictions.at("non_l_total") == 1 + m + Rational(m, k) );
    }
  }
  CHECK_THROWS_AS(gen_spiked_path(2, Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(gen_spiked_path(0, Rational(0)), std::invalid_argument);
}

TEST_CASE("double spiked path and spiked cycle") {
  for (const Rational& delta : {Rational(-1, 2), Rational(0), Rational(1)}) {
    for (int m = 1; m <= 5; ++m) {
      const auto d = gen_double_sp(m, delta);
      CHECK(classify(d.graph) == GraphClass::Unicyclic);
      const Rational k = d.predictions.at("k");
      const Rational spikes = 2 * Rational(m) / k;
      // Spikes are walked twice, the cycle once.
      const Rational opt = opt_cactus(d.graph).length;
      CHECK(opt == d.graph.total_weight() + spikes);
      CHECK(opt - d.predictions.at("l_total") <= 4 * m + 8);

      const auto c = gen_sp_cycle(m, delta);
      CHECK(classify(c.graph) == GraphClass::Unicyclic);
      CHECK(c.graph.find_edge(c.named.at("hub"), c.named.at("s")).has_value());
      CHECK(c.graph.find_edge(c.named.at("hub"), c.named.at("exit")).has_value());
    }
  }
  const auto small = gen_double_sp(1, Rational(-1, 2));
  CHECK(small.graph.vertex_count() == 14);
  CHECK(opt_cactus(small.graph).length == opt_exact(small.graph).length);
  CHECK(small.graph.start() == small.named.at("s"));
  CHECK(small.graph.find_edge(small.named.at("hub_left"), small.named.at("s")).has_value());
  CHECK(small.graph.find_edge(small.named.at("hub_right"), small.named.at("sp2.entry")).has_value());
}

TEST_CASE("planar family shape") {
  for (int m = 1; m <= 8; ++m) {
    const auto d = gen_planar_lower(m);
    CHECK(d.graph.vertex_count() == std::size_t(3 * m + 1));
    CHECK(d.graph.edge_count() == std::size_t(4 * m));
    CHECK(shortest_path(d.graph, d.named.at("s"), d.named.at("p")).length == m);
    CHECK(d.predictions.at("ratio_lb") == Rational(m, 3));
    CHECK(d.predictions.at("opt_upper") == 6 * m);
    if (m >= 2) CHECK(classify(d.graph) == GraphClass::General);
  }
}

TEST_CASE("random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (auto family : {RandomFamily::Tree, RandomFamily::Unicyclic, RandomFamily::Cactus}) {
      const RandomSpec spec{family, 5 + seed % 40, seed, 7, 3};
      const auto a = gen_random(spec);
      const auto b = gen_random(spec);
      CHECK(a.graph == b.graph);
      CHECK(a.graph.vertex_count() == spec.n);
      const auto cycles = cycle_decomposition(a.graph).cycles.size();
      switch (family) {
        case RandomFamily::Tree: CHECK(classify(a.graph) == GraphClass::Tree); break;
        case RandomFamily::Unicyclic: CHECK(classify(a.graph) == GraphClass::Unicyclic); break;
        case RandomFamily::Cactus:
          CHECK(classify(a.graph) == GraphClass::Cactus);
          CHECK(cycles >= 2);
          break;
      }
      for (const Edge& e : a.graph.edges()) {
        CHECK(e.weight > 0);
        CHECK(numerator_of(e.weight) <= 7);
        CHECK(denominator_of(e.weight) <= 3);
      }
    }
  }
  CHECK(gen_random({RandomFamily::Tree, 1, 3, 5, 5}).graph.edge_count() == 0);
  CHECK_FALSE(gen_random({RandomFamily::Tree, 30, 1, 9, 9}).graph == gen_random({RandomFamily::Tree, 30, 2, 9, 9}).graph);
  CHECK_THROWS_AS(gen_random({RandomFamily::Unicyclic, 2, 1, 5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(gen_random({RandomFamily::Cactus, 4, 1, 5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(gen_random({RandomFamily::Tree, 0, 1, 5, 5}), std::invalid_argument);
}

TEST_CASE("metadata round trip") {
  for (const auto& d : {gen_gk(3), gen_double_sp(2, Rational(1, 2)), gen_planar_lower(3),
                        gen_random({RandomFamily::Cactus, 9, 4, 5, 2})}) {
    std::stringstream ss;
    write_metadata(ss, d);
    const auto meta = read_metadata(ss);
    CHECK(meta.family == d.family);
    CHECK(meta.params == d.params);
    CHECK(meta.named == d.named);
    CHECK(meta.predictions == d.predictions);
  }
}

TEST_CASE("generate dispatcher") {
  CHECK(generate("gk", {{"k", "4"}}).graph == gen_gk(4).graph);
  CHECK(generate("double-sp", {{"m", "2"}, {"delta", "1/2"}}).graph == gen_double_sp(2, Rational(1, 2)).graph);
  CHECK(generate("random", {{"family", "unicyclic"}, {"n", "8"}, {"seed", "5"}}).id() ==
        gen_random({RandomFamily::Unicyclic, 8, 5, 10, 4}).id());
  CHECK(generate("gk", {{"k", "2"}}).id() == "gk[k=2]");
  CHECK_THROWS_AS(generate("gk", {}), ConfigError);
  CHECK_THROWS_AS(generate("gk", {{"k", "2"}, {"m", "1"}}), ConfigError);
  CHECK_THROWS_AS(generate("gk", {{"k", "two"}}), ConfigError);
  CHECK_THROWS_AS(generate("gk", {{"k", "0"}}), ConfigError);
  CHECK_THROWS_AS(generate("hypercube", {{"k", "2"}}), ConfigError);
  CHECK_THROWS_AS(generate("spiked-path", {{"m", "2"}, {"delta", "-1"}}), ConfigError);
  CHECK_THROWS_AS(generate("random", {{"family", "grid"}, {"n", "5"}}), ConfigError);
}
