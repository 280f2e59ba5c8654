#pragma once

#include "explore/engine.hpp"
#include "explore/graph.hpp"
#include "explore/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace explore {

/// Blocking parameter. A boundary edge e=(u,v) is blocked by a strictly
/// shorter boundary edge e'=(u',v') when the known distance from u to v' is at
/// most (1+delta)|e|. delta may be irrational (a + b*sqrt(r)); every
/// comparison stays exact.
struct BlockingParams {
  QuadraticNumber delta;

  /// For delta <= -1 nothing is ever blocked and Blocking reduces to DFS.
  bool dfs_degenerate() const { return delta <= QuadraticNumber(-1); }

  /// distance <= (1 + delta) * weight, decided exactly.
  bool within_radius(const Rational& distance, const Rational& weight) const;
};

struct BlockRecord {
  BoundaryEdge blocked_edge;
  VertexId blocker_tip = 0;
};

/// First boundary edge (in BoundaryOrder) that blocks e in the current state.
std::optional<BoundaryEdge> is_blocked(const Explorer& state, const BoundaryEdge& e,
                                       const BlockingParams& params);

struct BlockingEvaluation {
  BoundaryEdge edge;
  std::optional<BoundaryEdge> blocker;
};

/// One pass through the while loop of a Blocking call.
struct IterationEvent {
  std::size_t index = 0;
  std::size_t depth = 0;      // recursion depth of the call
  VertexId call_vertex = 0;   // y of the call
  BoundaryEdge chosen;
  std::vector<BlockingEvaluation> evaluations;
  Rational walk_in;   // y -> u
  Rational walk_out;  // v -> y after the recursive call
  Rational charge;    // walk_in + |e| + walk_out
};

struct InvariantViolation {
  std::string invariant;
  std::string detail;
};

struct BlockingOptions {
  /// Audit the charge bound, write-once charging and, on cactus graphs, the
  /// long-edge properties while running.
  bool instrument = true;
};

struct BlockingAudit {
  bool enabled = false;
  bool cycles_available = false;          // long-edge checks need a cactus
  std::size_t long_edge_evaluations = 0;  // unblocked long boundary edges inspected
  std::size_t long_edge_traversals = 0;   // long edges crossed as boundary edges
  std::vector<InvariantViolation> violations;

  bool ok() const { return violations.empty(); }
};

struct BlockingRun {
  Tour tour;
  std::vector<Rational> ledger;  // by EdgeId
  std::vector<unsigned> charge_counts;
  std::vector<IterationEvent> events;
  std::vector<BlockRecord> block_records;
  BlockingAudit audit;
  bool complete = false;  // every vertex visited and the tour is closed
};

BlockingRun run_blocking(const Graph& g, const BlockingParams& params,
                         const BlockingOptions& options = {});

/// Nearest Neighbor: always move to the unvisited vertex with the smallest
/// known distance (ties: smaller id, then lexicographically smaller path),
/// then return to start.
Tour run_nn(const Graph& g);

/// Depth-first exploration: from the current vertex take the boundary edges
/// leaving it in BoundaryOrder, recurse, then walk back to the vertex that
/// discovered it along a shortest known path.
Tour run_dfs(const Graph& g);

/// One line per while-loop iteration.
void write_event_log(std::ostream& out, const BlockingRun& run);

}  // namespace explore
