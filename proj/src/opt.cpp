#include "explore/opt.hpp"

#include "dijkstra.hpp"
#include "explore/errors.hpp"

#include <cstdint>
#include <limits>

namespace explore {

std::string_view to_string(OptMethod m) {
  return m == OptMethod::CactusClosedForm ? "cactus-closed-form" : "exact-dp";
}

OptResult opt_cactus(const Graph& g) {
  const CycleDecomposition parts = cycle_decomposition(g);
  OptResult out;
  out.method = OptMethod::CactusClosedForm;
  for (EdgeId b : parts.bridges) out.length += 2 * g.edge(b).weight;
  for (const auto& c : parts.cycles) {
    Rational heaviest = 0;
    for (EdgeId e : c.edges) heaviest = std::max(heaviest, g.edge(e).weight);
    const Rational around = c.total_length;
    const Rational skip_heaviest = 2 * (c.total_length - heaviest);
    Rational contribution = std::min(around, skip_heaviest);
    out.length += contribution;
    out.per_cycle_detail.push_back({c, long_edge(g, c), std::move(contribution)});
  }
  return out;
}

namespace {

// Closed walk through all vertices starting and ending at `start` on a
// complete metric `dist`. Subsets range over the vertices other than start.
template <class T>
T held_karp(const std::vector<std::vector<T>>& dist, std::size_t start) {
  const std::size_t n = dist.size();
  if (n == 1) return T(0);
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != start) others.push_back(v);
  }
  const std::size_t k = others.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<T> dp((full + 1) * k);
  auto at = [&](std::size_t mask, std::size_t j) -> T& { return dp[mask * k + j]; };

  for (std::size_t j = 0; j < k; ++j) at(std::size_t{1} << j, j) = dist[start][others[j]];
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t rest = mask ^ (std::size_t{1} << j);
      bool first = true;
      T best{};
      for (std::size_t i = 0; i < k; ++i) {
        if (!(rest & (std::size_t{1} << i))) continue;
        T candidate = at(rest, i) + dist[others[i]][others[j]];
        if (first || candidate < best) {
          best = std::move(candidate);
          first = false;
        }
      }
      at(mask, j) = std::move(best);
    }
  }
  T answer{};
  for (std::size_t j = 0; j < k; ++j) {
    T candidate = at(full, j) + dist[others[j]][start];
    if (j == 0 || candidate < answer) answer = std::move(candidate);
  }
  return answer;
}

std::vector<std::vector<Rational>> metric_closure(const Graph& g) {
  const auto always = [](VertexId) { return true; };
  std::vector<std::vector<Rational>> dist(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto table = detail::dijkstra(g, v, always, always);
    dist[v].reserve(table.size());
    for (const auto& d : table) dist[v].push_back(*d);
  }
  return dist;
}

}  // namespace

OptResult opt_exact(const Graph& g, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw InstanceTooLarge("exact oracle limited to " + std::to_string(limit) + " vertices, graph has " +
                           std::to_string(g.vertex_count()));
  }
  const auto dist = metric_closure(g);
  OptResult out;
  out.method = OptMethod::ExactDp;

  // Scale to integers when the result provably fits in 64 bits: every DP
  // value is a sum of at most n closure distances, each at most |G|.
  Integer scale = 1;
  for (const auto& e : g.edges()) scale = boost::multiprecision::lcm(scale, denominator_of(e.weight));
  const Rational bound = Rational(g.total_weight() * scale) * Rational(g.vertex_count() + 1);
  if (bound < Rational(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::vector<std::int64_t>> scaled(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) {
      for (const auto& d : dist[i]) scaled[i].push_back(numerator_of(d * scale).convert_to<std::int64_t>());
    }
    out.length = Rational(Integer(held_karp(scaled, g.start())), scale);
  } else {
    out.length = held_karp(dist, g.start());
  }
  return out;
}

}  // namespace explore
