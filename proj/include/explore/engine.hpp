#pragma once

#include "explore/graph.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace explore {

/// A known edge with exactly one visited endpoint, oriented visited -> unvisited.
struct BoundaryEdge {
  VertexId from = 0;
  VertexId to = 0;
  Rational weight;

  friend bool operator==(const BoundaryEdge&, const BoundaryEdge&) = default;
};

/// Ascending (weight, from, to): the selection order shared by every strategy.
struct BoundaryOrder {
  bool operator()(const BoundaryEdge& a, const BoundaryEdge& b) const {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  }
};

struct Step {
  VertexId from = 0;
  VertexId to = 0;
  Rational weight;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Tour {
  VertexId start = 0;
  std::vector<Step> steps;
  Rational total_cost;
  bool closed = false;  // set once the run ends at start with every vertex visited
};

/// Writes `step <u> <v> <num>/<den>` per traversal and a trailing `total` line.
void write_trace(std::ostream& out, const Tour& tour);
std::string format_trace(const Tour& tour);
/// Reads a trace back. Consecutive steps must share a vertex and the total
/// must equal the sum of step weights.
Tour read_trace(std::istream& in);

/// The searcher's view of a graph under the fixed-graph online model. Edges
/// become known when one of their endpoints is first visited. Strategies only
/// see visited vertices, known edges and distances through the known part;
/// every query about unrevealed structure is rejected with IllegalMove.
class Explorer {
 public:
  explicit Explorer(const Graph& graph);
  explicit Explorer(Graph&&) = delete;

  VertexId start() const { return graph_.start(); }
  VertexId position() const { return position_; }
  bool is_visited(VertexId v) const;
  std::size_t visited_count() const { return visited_count_; }
  /// Visited vertices in the order they were first reached.
  const std::vector<VertexId>& visit_order() const { return visit_order_; }

  /// Current boundary edges in BoundaryOrder.
  const std::set<BoundaryEdge, BoundaryOrder>& boundary_edges() const { return boundary_; }
  bool exploration_complete() const { return boundary_.empty(); }

  /// Known edges at a visited vertex: (neighbor, weight) pairs by neighbor id.
  std::vector<std::pair<VertexId, Rational>> known_edges_at(VertexId v) const;

  /// Length of a shortest known walkable path from visited u to v, where every
  /// vertex except possibly v itself must be visited. nullopt if none exists.
  /// v must be visited or the tip of a boundary edge.
  std::optional<Rational> known_distance(VertexId u, VertexId v) const;

  /// Known distances from visited u to every visited vertex and boundary tip
  /// it can reach (one Dijkstra).
  std::map<VertexId, Rational> known_distances_from(VertexId u) const;

  /// Known distances from every visited vertex to the boundary tip (or
  /// visited vertex) v.
  std::map<VertexId, Rational> known_distances_to(VertexId v) const;

  /// Lexicographically smallest shortest known walkable path u -> v.
  std::vector<VertexId> known_path(VertexId u, VertexId v) const;

  /// Moves along the lexicographically smallest shortest known path to a
  /// visited target and returns the cost incurred.
  Rational walk(VertexId target);

  /// Crosses a boundary edge from the current position, revealing the edges
  /// of its unvisited endpoint.
  void traverse(const BoundaryEdge& e);

  /// Adds to the charge ledger of the (known) edge a-b.
  void charge(VertexId a, VertexId b, const Rational& amount);

  const Tour& tour() const { return tour_; }
  /// Marks the tour closed if every vertex is visited and the searcher is at start.
  const Tour& finish();

  /// Per-edge accumulated charge and number of charge() calls, indexed by EdgeId.
  const std::vector<Rational>& charge_ledger() const { return ledger_; }
  const std::vector<unsigned>& charge_counts() const { return charge_counts_; }
  Rational ledger_total() const;

 private:
  void visit(VertexId v);
  void require_visited(VertexId v, const char* what) const;
  void require_known(VertexId v, const char* what) const;
  bool is_boundary_tip(VertexId v) const;
  void append_step(VertexId from, VertexId to, const Rational& weight);

  const Graph& graph_;
  std::vector<bool> visited_;
  std::size_t visited_count_ = 0;
  std::vector<VertexId> visit_order_;
  std::set<BoundaryEdge, BoundaryOrder> boundary_;
  std::vector<unsigned> tip_multiplicity_;  // number of boundary edges ending at v
  VertexId position_;
  Tour tour_;
  std::vector<Rational> ledger_;
  std::vector<unsigned> charge_counts_;
};

}  // namespace explore
