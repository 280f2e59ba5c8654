#pragma once

#include "explore/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace explore {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational weight;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

/// Connected, simple, positively weighted undirected graph on the vertex set
/// {0, ..., n-1} with a distinguished start vertex. Immutable once built.
class Graph {
 public:
  /// Validates every invariant and throws InvalidGraph on violation.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, VertexId start);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexId start() const { return start_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Incident edges of v ordered by neighbor id.
  std::span<const Incidence> incidences(VertexId v) const { return adjacency_.at(v); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  Rational total_weight() const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.start_ == y.start_ && x.adjacency_.size() == y.adjacency_.size() &&
           x.edges_ == y.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  VertexId start_;
};

enum class GraphClass { Tree, Unicyclic, Cactus, General };

std::string_view to_string(GraphClass c);

/// Simple cycle given as a closed edge sequence; consecutive edges share a
/// vertex and the last edge closes back onto the first.
struct Cycle {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // vertices[i] is shared by edges[i-1] and edges[i]
  Rational total_length;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;
  std::vector<EdgeId> bridges;
  /// For each edge, the index of its cycle, or nullopt for bridges.
  std::vector<std::optional<std::size_t>> cycle_of_edge;
};

GraphClass classify(const Graph& g);

/// Splits the edges of a cactus into edge-disjoint simple cycles and bridges.
/// Throws UnsupportedGraphClass if some edge lies on more than one cycle.
CycleDecomposition cycle_decomposition(const Graph& g);

/// The unique edge of c longer than half of |c|, if any.
std::optional<EdgeId> long_edge(const Graph& g, const Cycle& c);

struct PathResult {
  Rational length;
  std::vector<VertexId> path;
};

/// Minimum-length u-v path; among equal lengths the lexicographically
/// smallest vertex sequence.
PathResult shortest_path(const Graph& g, VertexId u, VertexId v);

/// Line-oriented text format:
///   graph <n> <m> <start>
///   edge <u> <v> <num>/<den>     (m lines)
/// Lines beginning with '#' and blank lines are ignored.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace explore
