#pragma once

// Internal shortest-path kernels shared by graph-core and the engine.

#include "explore/graph.hpp"

#include <functional>
#include <optional>
#include <queue>
#include <vector>

namespace explore::detail {

using DistanceTable = std::vector<std::optional<Rational>>;

/// Dijkstra from source. `may_enter(w)` restricts which vertices can be
/// reached at all; `may_expand(v)` restricts which reached vertices relax
/// their incident edges (the source always expands).
template <class Enter, class Expand>
DistanceTable dijkstra(const Graph& g, VertexId source, Enter&& may_enter, Expand&& may_expand) {
  DistanceTable dist(g.vertex_count());
  std::vector<bool> done(g.vertex_count(), false);
  using Item = std::pair<Rational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = Rational(0);
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    if (v != source && !may_expand(v)) continue;
    for (const auto& inc : g.incidences(v)) {
      const VertexId w = inc.neighbor;
      if (done[w] || !may_enter(w)) continue;
      Rational nd = d + g.edge(inc.edge).weight;
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        queue.emplace(std::move(nd), w);
      }
    }
  }
  return dist;
}

/// Walks from `from` to the root of `to_target` (a table of distances to the
/// target), choosing the smallest admissible neighbor id at every step. This
/// yields the lexicographically smallest shortest vertex sequence.
inline std::vector<VertexId> lexicographic_path(const Graph& g, const DistanceTable& to_target,
                                                VertexId from, VertexId target) {
  std::vector<VertexId> path{from};
  VertexId cur = from;
  while (cur != target) {
    const Rational& here = *to_target[cur];
    bool advanced = false;
    for (const auto& inc : g.incidences(cur)) {
      const auto& there = to_target[inc.neighbor];
      if (there && *there + g.edge(inc.edge).weight == here) {
        cur = inc.neighbor;
        path.push_back(cur);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // unreachable when the table is consistent
  }
  return path;
}

}  // namespace explore::detail
