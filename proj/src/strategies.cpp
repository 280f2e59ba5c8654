#include "explore/strategies.hpp"

#include <map>
#include <ostream>
#include <set>

namespace explore {

bool BlockingParams::within_radius(const Rational& distance, const Rational& weight) const {
  const QuadraticNumber radius = (QuadraticNumber(1) + delta) * QuadraticNumber(weight);
  return (radius - QuadraticNumber(distance)).sign() >= 0;
}

namespace {

// Known distances from a vertex, computed at most once per loop evaluation.
class DistanceCache {
 public:
  explicit DistanceCache(const Explorer& state) : state_(state) {}

  const std::map<VertexId, Rational>& from(VertexId u) {
    auto it = cache_.find(u);
    if (it == cache_.end()) it = cache_.emplace(u, state_.known_distances_from(u)).first;
    return it->second;
  }

 private:
  const Explorer& state_;
  std::map<VertexId, std::map<VertexId, Rational>> cache_;
};

std::optional<BoundaryEdge> find_blocker(const Explorer& state, const BoundaryEdge& e,
                                         const BlockingParams& params, DistanceCache& cache) {
  if (params.dfs_degenerate()) return std::nullopt;
  const auto& dist = cache.from(e.from);
  for (const auto& other : state.boundary_edges()) {
    if (!(other.weight < e.weight)) break;
    const auto it = dist.find(other.to);
    if (it != dist.end() && params.within_radius(it->second, e.weight)) return other;
  }
  return std::nullopt;
}

std::string edge_label(const BoundaryEdge& e) {
  return std::to_string(e.from) + "-" + std::to_string(e.to);
}

class BlockingRunner {
 public:
  BlockingRunner(const Graph& g, const BlockingParams& params, const BlockingOptions& options)
      : graph_(g), params_(params), state_(g) {
    run_.audit.enabled = options.instrument;
    if (options.instrument && classify(g) != GraphClass::General) {
      cycles_ = cycle_decomposition(g);
      for (const auto& c : cycles_->cycles) long_edges_.push_back(long_edge(g, c));
      run_.audit.cycles_available = true;
    }
  }

  BlockingRun run() && {
    explore_from(graph_.start(), 0);
    run_.tour = state_.finish();
    run_.ledger = state_.charge_ledger();
    run_.charge_counts = state_.charge_counts();
    run_.complete = run_.tour.closed;
    if (run_.audit.enabled) audit_ledger();
    return std::move(run_);
  }

 private:
  bool triggered_by(const BoundaryEdge& e, VertexId y) const {
    const auto it = blocked_by_tip_.find({e.from, e.to});
    return it != blocked_by_tip_.end() && it->second.contains(y);
  }

  // Blocking(G, y) with y explored for the first time.
  void explore_from(VertexId y, std::size_t depth) {
    while (true) {
      DistanceCache cache(state_);
      std::vector<BlockingEvaluation> evaluations;
      std::optional<BoundaryEdge> chosen;
      for (const auto& e : state_.boundary_edges()) {
        if (e.from != y && !triggered_by(e, y)) continue;
        auto blocker = find_blocker(state_, e, params_, cache);
        if (!blocker && !chosen) chosen = e;
        evaluations.push_back({e, std::move(blocker)});
      }
      if (run_.audit.enabled && cycles_) audit_unblocked_long_edges(cache);
      if (!chosen) return;

      const BoundaryEdge e = *chosen;
      const std::size_t slot = run_.events.size();
      run_.events.push_back({slot, depth, y, e, std::move(evaluations), 0, 0, 0});

      Rational walk_in = state_.walk(e.from);
      record_blocks_on(e.to);
      if (run_.audit.enabled && cycles_) audit_traversal(e);
      state_.traverse(e);
      explore_from(e.to, depth + 1);
      Rational walk_out = state_.walk(y);

      Rational charge = walk_in + e.weight + walk_out;
      state_.charge(e.from, e.to, charge);
      auto& event = run_.events[slot];
      event.walk_in = std::move(walk_in);
      event.walk_out = std::move(walk_out);
      event.charge = std::move(charge);
    }
  }

  // Called just before `tip` is explored. Known distances only shrink and the
  // boundary edges into `tip` only accumulate, so if some edge e was ever
  // blocked by an edge ending at `tip`, it is blocked by one right now.
  void record_blocks_on(VertexId tip) {
    if (params_.dfs_degenerate()) return;
    std::optional<Rational> shortest_into_tip;
    for (const auto& e : state_.boundary_edges()) {
      if (e.to == tip) {
        shortest_into_tip = e.weight;
        break;
      }
    }
    const auto dist_to_tip = state_.known_distances_to(tip);
    for (const auto& e : state_.boundary_edges()) {
      if (e.to == tip || !(*shortest_into_tip < e.weight)) continue;
      const auto it = dist_to_tip.find(e.from);
      if (it == dist_to_tip.end() || !params_.within_radius(it->second, e.weight)) continue;
      if (blocked_by_tip_[{e.from, e.to}].insert(tip).second) {
        run_.block_records.push_back({e, tip});
      }
    }
  }

  std::optional<std::size_t> long_edge_cycle(VertexId a, VertexId b) const {
    const EdgeId id = *graph_.find_edge(a, b);
    const auto& cycle = cycles_->cycle_of_edge[id];
    if (!cycle || long_edges_[*cycle] != id) return std::nullopt;
    return cycle;
  }

  void audit_unblocked_long_edges(DistanceCache& cache) {
    const QuadraticNumber scale = QuadraticNumber(1) + params_.delta;
    for (const auto& e : state_.boundary_edges()) {
      const auto cycle = long_edge_cycle(e.from, e.to);
      if (!cycle || find_blocker(state_, e, params_, cache)) continue;
      ++run_.audit.long_edge_evaluations;
      const Rational rest = cycles_->cycles[*cycle].total_length - e.weight;
      // (1 + delta)|e| < |C| - |e|
      if (!(scale * QuadraticNumber(e.weight) < QuadraticNumber(rest))) {
        run_.audit.violations.push_back(
            {"unblocked-long-edge", "long edge " + edge_label(e) + " is unblocked but (1+delta)|e| >= |C|-|e|"});
      }
    }
  }

  void audit_traversal(const BoundaryEdge& e) {
    const auto cycle = long_edge_cycle(e.from, e.to);
    if (!cycle) return;
    ++run_.audit.long_edge_traversals;
    if (params_.delta.sign() <= 0) return;
    for (EdgeId id : cycles_->cycles[*cycle].edges) {
      const Edge& other = graph_.edge(id);
      const bool is_e = (other.u == e.from && other.v == e.to) || (other.v == e.from && other.u == e.to);
      if (!is_e && state_.is_visited(other.u) != state_.is_visited(other.v)) {
        run_.audit.violations.push_back(
            {"long-edge-traversed", "long edge " + edge_label(e) + " traversed while its cycle has another boundary edge"});
        return;
      }
    }
  }

  void audit_ledger() {
    const QuadraticNumber factor = QuadraticNumber(4) + QuadraticNumber(2) * params_.delta;
    const bool bound_applies = params_.delta > QuadraticNumber(-1);
    Rational total = 0;
    for (EdgeId id = 0; id < graph_.edge_count(); ++id) {
      const Edge& edge = graph_.edge(id);
      total += run_.ledger[id];
      const std::string label = std::to_string(edge.u) + "-" + std::to_string(edge.v);
      if (run_.charge_counts[id] > 1) {
        run_.audit.violations.push_back({"charge-once", "edge " + label + " charged " +
                                                            std::to_string(run_.charge_counts[id]) + " times"});
      }
      if (bound_applies && run_.ledger[id] > 0 &&
          QuadraticNumber(run_.ledger[id]) > factor * QuadraticNumber(edge.weight)) {
        run_.audit.violations.push_back({"charge-bound", "edge " + label + " charged " +
                                                             to_compact_string(run_.ledger[id]) +
                                                             " > (4+2delta)|e|"});
      }
    }
    if (total != run_.tour.total_cost) {
      run_.audit.violations.push_back({"ledger-total", "ledger total " + to_compact_string(total) +
                                                           " differs from tour cost " +
                                                           to_compact_string(run_.tour.total_cost)});
    }
  }

  const Graph& graph_;
  BlockingParams params_;
  Explorer state_;
  BlockingRun run_;
  std::map<std::pair<VertexId, VertexId>, std::set<VertexId>> blocked_by_tip_;
  std::optional<CycleDecomposition> cycles_;
  std::vector<std::optional<EdgeId>> long_edges_;
};

}  // namespace

std::optional<BoundaryEdge> is_blocked(const Explorer& state, const BoundaryEdge& e,
                                       const BlockingParams& params) {
  DistanceCache cache(state);
  return find_blocker(state, e, params, cache);
}

BlockingRun run_blocking(const Graph& g, const BlockingParams& params, const BlockingOptions& options) {
  return BlockingRunner(g, params, options).run();
}

Tour run_nn(const Graph& g) {
  Explorer state(g);
  while (!state.exploration_complete()) {
    const auto dist = state.known_distances_from(state.position());
    std::optional<std::pair<Rational, VertexId>> best;
    for (const auto& e : state.boundary_edges()) {
      const auto it = dist.find(e.to);
      if (it == dist.end()) continue;
      std::pair<Rational, VertexId> candidate{it->second, e.to};
      if (!best || candidate < *best) best = std::move(candidate);
    }
    const VertexId target = best->second;
    const auto path = state.known_path(state.position(), target);
    const VertexId last = path[path.size() - 2];
    state.walk(last);
    for (const auto& [neighbor, weight] : state.known_edges_at(last)) {
      if (neighbor == target) {
        state.traverse({last, target, weight});
        break;
      }
    }
  }
  state.walk(g.start());
  return state.finish();
}

namespace {

void depth_first(Explorer& state, VertexId y) {
  while (true) {
    std::optional<BoundaryEdge> next;
    for (const auto& e : state.boundary_edges()) {
      if (e.from == y) {
        next = e;
        break;
      }
    }
    if (!next) return;
    state.traverse(*next);
    depth_first(state, next->to);
    state.walk(y);
  }
}

}  // namespace

Tour run_dfs(const Graph& g) {
  Explorer state(g);
  depth_first(state, g.start());
  return state.finish();
}

void write_event_log(std::ostream& out, const BlockingRun& run) {
  for (const auto& ev : run.events) {
    out << "iter " << ev.index << " depth " << ev.depth << " at " << ev.call_vertex << " edge "
        << ev.chosen.from << ' ' << ev.chosen.to << ' ' << to_exact_string(ev.chosen.weight)
        << " walk_in " << to_exact_string(ev.walk_in) << " walk_out " << to_exact_string(ev.walk_out)
        << " charge " << to_exact_string(ev.charge) << " evals";
    for (const auto& eval : ev.evaluations) {
      out << ' ' << edge_label(eval.edge);
      if (eval.blocker) {
        out << ":blocked-by:" << edge_label(*eval.blocker);
      } else {
        out << ":open";
      }
    }
    out << '\n';
  }
}

}  // namespace explore
