#include "explore/reproduce.hpp"

#include "explore/generators.hpp"
#include "explore/harness.hpp"
#include "explore/opt.hpp"
#include "explore/strategies.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace explore {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string decimal(const Rational& r) { return to_decimal_string(r); }
std::string decimal(const QuadraticNumber& q) { return to_decimal_string(q); }

QuadraticNumber q(const Rational& r) { return QuadraticNumber(r); }

const QuadraticNumber& golden_delta() {
  static const QuadraticNumber d = QuadraticNumber::sqrt(2) / QuadraticNumber(2) - QuadraticNumber(1);
  return d;
}

// Seeded size in [lo, hi].
std::size_t size_for(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>((seed * 2654435761u) % (hi - lo + 1));
}

InstanceDescriptor random_instance(RandomFamily family, std::size_t n, std::uint64_t seed,
                                   std::int64_t max_numerator = 10) {
  RandomSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  spec.max_numerator = max_numerator;
  return gen_random(spec);
}

Rational cactus_ratio(const InstanceDescriptor& d, const BlockingRun& run) {
  return run.tour.total_cost / opt_cactus(d.graph).length;
}

// Shared corpus for the invariant checks.
struct CorpusRun {
  std::string instance;
  QuadraticNumber delta;
  bool cactus = false;
  const Graph* graph = nullptr;
  BlockingRun run;
};

struct Corpus {
  std::vector<InstanceDescriptor> instances;
  std::vector<Rational> opt;
  std::vector<CorpusRun> runs;
};

std::vector<QuadraticNumber> corpus_deltas() {
  return {QuadraticNumber(-1), QuadraticNumber(Rational(-1, 2)), golden_delta(), QuadraticNumber(0),
          QuadraticNumber(Rational(1, 2)), QuadraticNumber(1), QuadraticNumber(2)};
}

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (auto family : {RandomFamily::Tree, RandomFamily::Unicyclic, RandomFamily::Cactus}) {
      for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        out.instances.push_back(random_instance(family, size_for(seed, 5, 30), 1000 + seed));
      }
    }
    // Wide weight ranges make long edges common.
    for (auto family : {RandomFamily::Unicyclic, RandomFamily::Cactus}) {
      for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        out.instances.push_back(random_instance(family, size_for(seed, 5, 30), 3000 + seed, 200));
      }
    }
    for (int k = 1; k <= 5; ++k) out.instances.push_back(gen_gk(k));
    for (const Rational& delta : {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
      for (int m : {1, 3, 6}) {
        out.instances.push_back(gen_spiked_path(m, delta));
        out.instances.push_back(gen_double_sp(m, delta));
        out.instances.push_back(gen_sp_cycle(m, delta));
      }
    }
    for (int m = 1; m <= 4; ++m) out.instances.push_back(gen_planar_lower(m));

    for (const auto& d : out.instances) {
      const bool small = d.graph.vertex_count() <= 12 || classify(d.graph) == GraphClass::General;
      out.opt.push_back(small ? opt_exact(d.graph).length : opt_cactus(d.graph).length);
    }
    for (const auto& d : out.instances) {
      const bool cactus = classify(d.graph) != GraphClass::General;
      for (const auto& delta : corpus_deltas()) {
        out.runs.push_back({d.id(), delta, cactus, &d.graph, run_blocking(d.graph, {delta})});
      }
    }
    return out;
  }();
  return c;
}

template <class Body>
ClaimResult timed(int id, std::string claim, Body body) {
  const auto t0 = Clock::now();
  ClaimResult r;
  r.id = id;
  r.claim = std::move(claim);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.measured = std::string("error: ") + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

ClaimResult check_nn_formula() {
  auto r = timed(1, "NN(G_k) = (k+2)2^k - 2 and OPT(G_k) = 6*2^k - 2k - 6, k = 1..8", [](ClaimResult& r) {
    bool ok = true;
    std::string first_miss;
    for (int k = 1; k <= 8; ++k) {
      const auto d = gen_gk(k);
      const Rational pow2(Integer(1) << k);
      const Rational nn = run_nn(d.graph).total_cost;
      const Rational opt = opt_cactus(d.graph).length;
      if (nn != (k + 2) * pow2 - 2 || opt != 6 * pow2 - 2 * k - 6) {
        ok = false;
        if (first_miss.empty()) {
          first_miss = "k=" + std::to_string(k) + ": nn=" + to_compact_string(nn) + " opt=" + to_compact_string(opt);
        }
      }
      if (k == 8) r.measured = "k=8: nn=" + to_compact_string(nn) + " opt=" + to_compact_string(opt);
    }
    if (!ok) r.measured = first_miss;
    r.bound = "exact equality, < 1 s";
    r.pass = ok;
  });
  if (r.seconds >= 1.0) r.pass = false;
  return r;
}

ClaimResult check_nn_log_ratio() {
  return timed(2, "NN(G_k)/OPT >= (log2(n+1)+1)/6, k = 1..8", [](ClaimResult& r) {
    bool ok = true;
    for (int k = 1; k <= 8; ++k) {
      const auto d = gen_gk(k);
      const Rational ratio = run_nn(d.graph).total_cost / opt_cactus(d.graph).length;
      const auto bound = applicable_bound(d, {StrategyKind::NearestNeighbor, {}}, ratio);
      ok = ok && bound && bound->satisfied;
      if (k == 8) {
        r.measured = "k=8: ratio=" + decimal(ratio);
        r.bound = bound ? ">= " + decimal(bound->value) : "n+1 not a power of two";
      }
    }
    r.pass = ok;
  });
}

ClaimResult check_gk_shortest_path() {
  return timed(3, "d(l_k, r_k) = 2^(k+1) - k - 2, k = 1..8", [](ClaimResult& r) {
    bool ok = true;
    for (int k = 1; k <= 8; ++k) {
      const auto d = gen_gk(k);
      const Rational len = shortest_path(d.graph, d.named.at("l_k"), d.named.at("r_k")).length;
      ok = ok && len == Rational((Integer(1) << (k + 1)) - k - 2);
      if (k == 8) r.measured = "k=8: " + to_compact_string(len);
    }
    r.bound = "exact equality";
    r.pass = ok;
  });
}

ClaimResult check_unicyclic_upper_bound() {
  auto r = timed(4, "Blocking(-1/2) <= 3 OPT on 200 random unicyclic graphs and both gadgets", [](ClaimResult& r) {
    const BlockingParams params{QuadraticNumber(Rational(-1, 2))};
    Rational worst = 0;
    std::size_t count = 0;
    bool clean = true;
    auto take = [&](const InstanceDescriptor& d) {
      const auto run = run_blocking(d.graph, params);
      worst = std::max(worst, cactus_ratio(d, run));
      clean = clean && run.complete && run.audit.ok();
      ++count;
    };
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      take(random_instance(RandomFamily::Unicyclic, size_for(seed, 3, 60), seed));
    }
    for (int m : {1, 2, 5, 10, 20}) {
      take(gen_double_sp(m, Rational(-1, 2)));
      take(gen_sp_cycle(m, Rational(-1, 2)));
    }
    r.measured = "max ratio " + decimal(worst) + " over " + std::to_string(count) + " instances";
    r.bound = "<= 3, < 30 s";
    r.pass = clean && worst <= 3;
  });
  if (r.seconds >= 30.0) r.pass = false;
  return r;
}

ClaimResult check_cactus_upper_bound() {
  auto r = timed(5, "Blocking(1/sqrt(2)-1) <= (5/2+sqrt(2)) OPT on 200 random cacti", [](ClaimResult& r) {
    const BlockingParams params{golden_delta()};
    const QuadraticNumber bound = QuadraticNumber(Rational(5, 2)) + QuadraticNumber::sqrt(2);
    Rational worst = 0;
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto d = random_instance(RandomFamily::Cactus, size_for(seed, 5, 60), 5000 + seed);
      const auto run = run_blocking(d.graph, params);
      const Rational ratio = cactus_ratio(d, run);
      worst = std::max(worst, ratio);
      ok = ok && run.complete && run.audit.ok() && q(ratio) <= bound;
    }
    r.measured = "max ratio " + decimal(worst) + " over 200 instances";
    r.bound = "<= " + bound.to_string() + " (" + decimal(bound) + "), < 30 s";
    r.pass = ok;
  });
  if (r.seconds >= 30.0) r.pass = false;
  return r;
}

ClaimResult check_lower_bound_gadget() {
  return timed(6, "double spiked path, m = 40: 4+2delta-0.2 <= ratio < 4+2delta", [](ClaimResult& r) {
    bool ok = true;
    std::string measured, bounds;
    for (const Rational& delta : {Rational(-1, 2), Rational(1)}) {
      const auto d = gen_double_sp(40, delta);
      const auto run = run_blocking(d.graph, {q(delta)});
      const Rational ratio = cactus_ratio(d, run);
      const Rational target = 4 + 2 * delta;
      const bool hit = ratio >= target - Rational(1, 5) && ratio < target;
      ok = ok && hit && run.complete;
      if (!measured.empty()) {
        measured += "; ";
        bounds += "; ";
      }
      measured += "delta=" + to_compact_string(delta) + ": " + decimal(ratio) + (hit ? "" : " (miss)");
      bounds += "[" + decimal(target - Rational(1, 5)) + ", " + decimal(target) + ")";
    }
    r.measured = measured;
    r.bound = bounds;
    r.pass = ok;
  });
}

ClaimResult check_planar_degeneration() {
  return timed(7, "planar family: cost >= 2m^2, ratio >= m/3, and OPT(m=2) = 12", [](ClaimResult& r) {
    bool ok = true;
    Rational min_margin;
    bool first = true;
    for (int m : {6, 9, 12}) {
      const auto d = gen_planar_lower(m);
      const OptValue opt = resolve_opt(d, OptPolicy::Auto, kDefaultExactLimit);
      for (const Rational& delta : {Rational(0), Rational(-1, 2)}) {
        const auto run = run_blocking(d.graph, {q(delta)});
        const Rational ratio = run.tour.total_cost / opt.length;
        ok = ok && run.complete && run.tour.total_cost >= 2 * m * m && ratio >= Rational(m, 3);
        const Rational margin = ratio / Rational(m, 3);
        if (first || margin < min_margin) min_margin = margin;
        first = false;
      }
    }
    // The closed form used above for m > 4 is checked against the exact oracle.
    for (int m = 1; m <= 4; ++m) {
      const auto d = gen_planar_lower(m);
      ok = ok && opt_exact(d.graph).length == d.predictions.at("opt");
    }
    const Rational opt2 = opt_exact(gen_planar_lower(2).graph).length;
    const bool paper_opt = opt2 == 12;
    r.measured = "min ratio/(m/3) " + decimal(min_margin) + "; opt_exact(m=2) = " + to_compact_string(opt2);
    r.bound = "cost >= 2m^2, ratio >= m/3, opt_exact(m=2) = 12";
    r.pass = ok && paper_opt;
  });
}

ClaimResult check_dfs_equivalence() {
  return timed(8, "Blocking(-1) tour = DFS tour on 100 random graphs per family", [](ClaimResult& r) {
    std::size_t same = 0, total = 0;
    for (auto family : {RandomFamily::Tree, RandomFamily::Unicyclic, RandomFamily::Cactus}) {
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const std::size_t lo = family == RandomFamily::Cactus ? 5 : family == RandomFamily::Unicyclic ? 3 : 1;
        const auto d = random_instance(family, size_for(seed, lo, 40), 9000 + seed);
        const auto blocking = run_blocking(d.graph, {QuadraticNumber(-1)}, {false});
        const auto dfs = run_dfs(d.graph);
        same += blocking.tour.steps == dfs.steps && blocking.tour.total_cost == dfs.total_cost;
        ++total;
      }
    }
    r.measured = std::to_string(same) + "/" + std::to_string(total) + " identical";
    r.bound = "all identical";
    r.pass = same == total;
  });
}

ClaimResult check_opt_oracles_agree() {
  auto r = timed(9, "opt_cactus = opt_exact on 200 random cacti with n <= 12", [](ClaimResult& r) {
    std::size_t agree = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto d = random_instance(RandomFamily::Cactus, size_for(seed, 5, 12), 20000 + seed);
      agree += opt_cactus(d.graph).length == opt_exact(d.graph).length;
    }
    r.measured = std::to_string(agree) + "/200 equal";
    r.bound = "all equal, < 60 s";
    r.pass = agree == 200;
  });
  if (r.seconds >= 60.0) r.pass = false;
  return r;
}

ClaimResult check_charge_bound() {
  return timed(10, "every Blocking run with delta > 0: charge(e) <= (4+2delta)|e|, charged at most once",
               [](ClaimResult& r) {
    const Corpus& c = corpus();
    std::size_t runs = 0, edges = 0, failures = 0;
    QuadraticNumber worst(0);
    for (const auto& cr : c.runs) {
      if (cr.delta.sign() <= 0) continue;
      ++runs;
      const QuadraticNumber factor = QuadraticNumber(4) + QuadraticNumber(2) * cr.delta;
      for (EdgeId e = 0; e < cr.graph->edge_count(); ++e) {
        const Rational& w = cr.graph->edge(e).weight;
        const QuadraticNumber used = q(cr.run.ledger[e] / w) / factor;
        worst = std::max(worst, used);
        failures += cr.run.charge_counts[e] > 1 || q(cr.run.ledger[e]) > factor * q(w);
        ++edges;
      }
    }
    r.measured = std::to_string(runs) + " runs, " + std::to_string(edges) + " edges, max charge/((4+2delta)|e|) " +
                 decimal(worst);
    r.bound = "<= 1, one charge per edge";
    r.pass = runs > 0 && failures == 0;
  });
}

ClaimResult check_long_edge_invariant() {
  return timed(11, "long boundary edges: never crossed early (delta > 0), unblocked only when short enough (delta <= 0)",
               [](ClaimResult& r) {
    const Corpus& c = corpus();
    std::size_t runs = 0, evaluations = 0, traversals = 0, violations = 0;
    for (const auto& cr : c.runs) {
      if (!cr.cactus) continue;
      ++runs;
      evaluations += cr.run.audit.long_edge_evaluations;
      traversals += cr.run.audit.long_edge_traversals;
      for (const auto& v : cr.run.audit.violations) {
        violations += v.invariant == "long-edge-traversed" || v.invariant == "unblocked-long-edge";
      }
    }
    r.measured = std::to_string(runs) + " cactus runs, " + std::to_string(traversals) + " long-edge crossings, " +
                 std::to_string(evaluations) + " unblocked long-edge checks, " + std::to_string(violations) +
                 " violations";
    r.bound = "0 violations";
    r.pass = runs > 0 && violations == 0;
  });
}

ClaimResult check_completeness() {
  return timed(12, "every strategy visits all vertices, returns to start, and costs >= OPT", [](ClaimResult& r) {
    const Corpus& c = corpus();
    std::size_t tours = 0, bad = 0;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
      const Graph& g = c.instances[i].graph;
      for (const Tour& t : {run_nn(g), run_dfs(g)}) {
        bad += !t.closed || t.total_cost < c.opt[i];
        ++tours;
      }
    }
    std::size_t i = 0;
    const std::size_t per_instance = corpus_deltas().size();
    for (const auto& cr : c.runs) {
      const Rational& opt = c.opt[i++ / per_instance];
      bad += !cr.run.complete || cr.run.tour.total_cost < opt;
      ++tours;
    }
    r.measured = std::to_string(tours - bad) + "/" + std::to_string(tours) + " tours complete and >= OPT";
    r.bound = "all";
    r.pass = bad == 0;
  });
}

std::vector<ClaimResult> reproduce_all(const std::function<void(const ClaimResult&)>& progress) {
  using Check = ClaimResult (*)();
  const Check checks[] = {check_nn_formula,           check_nn_log_ratio,         check_gk_shortest_path,
                          check_unicyclic_upper_bound, check_cactus_upper_bound,  check_lower_bound_gadget,
                          check_planar_degeneration,   check_dfs_equivalence,     check_opt_oracles_agree,
                          check_charge_bound,          check_long_edge_invariant, check_completeness};
  std::vector<ClaimResult> out;
  for (Check check : checks) {
    out.push_back(check());
    if (progress) progress(out.back());
  }
  return out;
}

void write_claims_table(std::ostream& out, const std::vector<ClaimResult>& results) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << std::right << std::setw(2) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.claim << '\n'
        << "      measured: " << r.measured << '\n'
        << "      bound:    " << r.bound << '\n'
        << "      time:     " << std::fixed << std::setprecision(3) << r.seconds << " s" << std::defaultfloat << '\n';
    passed += r.pass;
  }
  out << passed << '/' << results.size() << " claims hold\n";
}

}  // namespace explore
