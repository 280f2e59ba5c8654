#include "explore/engine.hpp"

#include "dijkstra.hpp"
#include "explore/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace explore {

Explorer::Explorer(const Graph& graph)
    : graph_(graph),
      visited_(graph.vertex_count(), false),
      tip_multiplicity_(graph.vertex_count(), 0),
      position_(graph.start()),
      ledger_(graph.edge_count()),
      charge_counts_(graph.edge_count(), 0) {
  tour_.start = graph.start();
  visit(graph.start());
}

bool Explorer::is_visited(VertexId v) const {
  return v < visited_.size() && visited_[v];
}

bool Explorer::is_boundary_tip(VertexId v) const {
  return v < tip_multiplicity_.size() && tip_multiplicity_[v] > 0;
}

void Explorer::require_visited(VertexId v, const char* what) const {
  if (!is_visited(v)) {
    throw IllegalMove(std::string(what) + ": vertex " + std::to_string(v) + " is not visited");
  }
}

void Explorer::require_known(VertexId v, const char* what) const {
  if (!is_visited(v) && !is_boundary_tip(v)) {
    throw IllegalMove(std::string(what) + ": vertex " + std::to_string(v) + " is not known");
  }
}

void Explorer::visit(VertexId v) {
  visited_[v] = true;
  ++visited_count_;
  visit_order_.push_back(v);
  for (const auto& inc : graph_.incidences(v)) {
    const Rational& w = graph_.edge(inc.edge).weight;
    if (visited_[inc.neighbor]) {
      boundary_.erase(BoundaryEdge{inc.neighbor, v, w});
      --tip_multiplicity_[v];
    } else {
      boundary_.insert(BoundaryEdge{v, inc.neighbor, w});
      ++tip_multiplicity_[inc.neighbor];
    }
  }
}

std::vector<std::pair<VertexId, Rational>> Explorer::known_edges_at(VertexId v) const {
  require_visited(v, "known_edges_at");
  std::vector<std::pair<VertexId, Rational>> out;
  for (const auto& inc : graph_.incidences(v)) {
    out.emplace_back(inc.neighbor, graph_.edge(inc.edge).weight);
  }
  return out;
}

namespace {

auto visited_only(const std::vector<bool>& visited) {
  return [&visited](VertexId w) { return static_cast<bool>(visited[w]); };
}

}  // namespace

std::optional<Rational> Explorer::known_distance(VertexId u, VertexId v) const {
  require_visited(u, "known_distance");
  require_known(v, "known_distance");
  const auto table = detail::dijkstra(graph_, v, visited_only(visited_), [](VertexId) { return true; });
  return table[u];
}

std::map<VertexId, Rational> Explorer::known_distances_from(VertexId u) const {
  require_visited(u, "known_distances_from");
  const auto table =
      detail::dijkstra(graph_, u, [](VertexId) { return true; }, visited_only(visited_));
  std::map<VertexId, Rational> out;
  for (VertexId v = 0; v < table.size(); ++v) {
    if (table[v]) out.emplace(v, *table[v]);
  }
  return out;
}

std::map<VertexId, Rational> Explorer::known_distances_to(VertexId v) const {
  require_known(v, "known_distances_to");
  const auto table = detail::dijkstra(graph_, v, visited_only(visited_), [](VertexId) { return true; });
  std::map<VertexId, Rational> out;
  for (VertexId x = 0; x < table.size(); ++x) {
    if (table[x]) out.emplace(x, *table[x]);
  }
  return out;
}

std::vector<VertexId> Explorer::known_path(VertexId u, VertexId v) const {
  require_visited(u, "known_path");
  require_known(v, "known_path");
  const auto table = detail::dijkstra(graph_, v, visited_only(visited_), [](VertexId) { return true; });
  if (!table[u]) {
    throw IllegalMove("no known path from " + std::to_string(u) + " to " + std::to_string(v));
  }
  return detail::lexicographic_path(graph_, table, u, v);
}

void Explorer::append_step(VertexId from, VertexId to, const Rational& weight) {
  tour_.steps.push_back({from, to, weight});
  tour_.total_cost += weight;
  tour_.closed = false;
}

Rational Explorer::walk(VertexId target) {
  if (!is_visited(target)) {
    throw IllegalMove("walk: target " + std::to_string(target) + " is not visited");
  }
  const auto path = known_path(position_, target);
  Rational cost = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Rational& w = graph_.edge(*graph_.find_edge(path[i - 1], path[i])).weight;
    append_step(path[i - 1], path[i], w);
    cost += w;
  }
  position_ = target;
  return cost;
}

void Explorer::traverse(const BoundaryEdge& e) {
  if (e.from != position_) {
    throw IllegalMove("traverse: searcher is at " + std::to_string(position_) + ", not " +
                      std::to_string(e.from));
  }
  if (!boundary_.contains(e)) {
    throw IllegalMove("traverse: " + std::to_string(e.from) + "-" + std::to_string(e.to) +
                      " is not a boundary edge");
  }
  append_step(e.from, e.to, e.weight);
  position_ = e.to;
  visit(e.to);
}

void Explorer::charge(VertexId a, VertexId b, const Rational& amount) {
  const auto id = graph_.find_edge(a, b);
  if (!id || (!is_visited(a) && !is_visited(b))) {
    throw IllegalMove("charge: " + std::to_string(a) + "-" + std::to_string(b) +
                      " is not a known edge");
  }
  ledger_[*id] += amount;
  ++charge_counts_[*id];
}

const Tour& Explorer::finish() {
  tour_.closed = visited_count_ == graph_.vertex_count() && position_ == graph_.start();
  return tour_;
}

Rational Explorer::ledger_total() const {
  Rational sum = 0;
  for (const auto& c : ledger_) sum += c;
  return sum;
}

void write_trace(std::ostream& out, const Tour& tour) {
  for (const auto& s : tour.steps) {
    out << "step " << s.from << ' ' << s.to << ' ' << to_exact_string(s.weight) << '\n';
  }
  out << "total " << to_exact_string(tour.total_cost) << '\n';
}

std::string format_trace(const Tour& tour) {
  std::ostringstream out;
  write_trace(out, tour);
  return out.str();
}

Tour read_trace(std::istream& in) {
  Tour tour;
  std::string line;
  std::optional<Rational> declared_total;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind) || kind.front() == '#') continue;
    if (declared_total) throw ParseError("line " + std::to_string(line_no) + ": data after total");
    if (kind == "step") {
      std::string u, v, w;
      if (!(words >> u >> v >> w)) throw ParseError("line " + std::to_string(line_no) + ": malformed step");
      Step s{static_cast<VertexId>(std::stoul(u)), static_cast<VertexId>(std::stoul(v)),
             parse_rational(w)};
      if (!tour.steps.empty() && tour.steps.back().to != s.from) {
        throw ParseError("line " + std::to_string(line_no) + ": step does not continue the tour");
      }
      if (tour.steps.empty()) tour.start = s.from;
      tour.total_cost += s.weight;
      tour.steps.push_back(std::move(s));
    } else if (kind == "total") {
      std::string w;
      if (!(words >> w)) throw ParseError("line " + std::to_string(line_no) + ": malformed total");
      declared_total = parse_rational(w);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + kind + "'");
    }
  }
  if (!declared_total) throw ParseError("trace has no total line");
  if (*declared_total != tour.total_cost) throw ParseError("trace total does not match its steps");
  tour.closed = tour.steps.empty() || tour.steps.back().to == tour.start;
  return tour;
}

}  // namespace explore
