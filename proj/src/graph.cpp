#include "explore/graph.hpp"

#include "dijkstra.hpp"
#include "explore/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace explore {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, VertexId start)
    : edges_(std::move(edges)), adjacency_(vertex_count), start_(start) {
  if (vertex_count == 0) throw InvalidGraph("graph needs at least one vertex");
  if (start >= vertex_count) {
    throw InvalidGraph("start vertex " + std::to_string(start) + " out of range");
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidGraph("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " references a missing vertex");
    }
    if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    if (e.weight <= 0) {
      throw InvalidGraph("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " has non-positive weight");
    }
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].neighbor == list[i - 1].neighbor) {
        const Edge& e = edges_[list[i].edge];
        throw InvalidGraph("parallel edges between " + std::to_string(e.u) + " and " +
                           std::to_string(e.v));
      }
    }
  }
  std::vector<bool> seen(vertex_count, false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[v]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != vertex_count) throw InvalidGraph("graph is not connected");
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return std::nullopt;
  const auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& inc, VertexId x) { return inc.neighbor < x; });
  if (it == list.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

Rational Graph::total_weight() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Unicyclic: return "unicyclic";
    case GraphClass::Cactus: return "cactus";
    case GraphClass::General: return "general";
  }
  return "general";
}

namespace {

// Biconnected components as edge lists (Hopcroft-Tarjan with an edge stack).
std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  struct Frame {
    VertexId v;
    std::optional<EdgeId> via;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  frames.push_back({g.start(), std::nullopt});
  disc[g.start()] = low[g.start()] = timer++;

  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto incs = g.incidences(f.v);
    if (f.next < incs.size()) {
      const Incidence inc = incs[f.next++];
      if (f.via && inc.edge == *f.via) continue;
      const VertexId w = inc.neighbor;
      if (disc[w] < 0) {
        edge_stack.push_back(inc.edge);
        disc[w] = low[w] = timer++;
        frames.push_back({w, inc.edge});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(inc.edge);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const VertexId parent = frames.back().v;
    low[parent] = std::min(low[parent], low[done.v]);
    if (low[done.v] >= disc[parent]) {
      std::vector<EdgeId> block;
      while (true) {
        const EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == *done.via) break;
      }
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

Cycle order_cycle(const Graph& g, const std::vector<EdgeId>& block) {
  VertexId first = g.edge(block.front()).u;
  for (EdgeId e : block) first = std::min({first, g.edge(e).u, g.edge(e).v});

  auto incident = [&](VertexId v, std::optional<EdgeId> except) {
    std::vector<EdgeId> out;
    for (EdgeId e : block) {
      if (e != except && (g.edge(e).u == v || g.edge(e).v == v)) out.push_back(e);
    }
    return out;
  };

  Cycle c;
  auto start_edges = incident(first, std::nullopt);
  std::sort(start_edges.begin(), start_edges.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).other(first) < g.edge(b).other(first);
  });
  EdgeId cur = start_edges.front();
  VertexId at = first;
  for (std::size_t i = 0; i < block.size(); ++i) {
    c.vertices.push_back(at);
    c.edges.push_back(cur);
    c.total_length += g.edge(cur).weight;
    at = g.edge(cur).other(at);
    if (i + 1 < block.size()) cur = incident(at, cur).front();
  }
  return c;
}

}  // namespace

CycleDecomposition cycle_decomposition(const Graph& g) {
  CycleDecomposition out;
  out.cycle_of_edge.assign(g.edge_count(), std::nullopt);
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() == 1) {
      out.bridges.push_back(block.front());
      continue;
    }
    std::vector<VertexId> verts;
    for (EdgeId e : block) {
      verts.push_back(g.edge(e).u);
      verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != block.size()) {
      throw UnsupportedGraphClass("edge " + std::to_string(g.edge(block.front()).u) + "-" +
                                  std::to_string(g.edge(block.front()).v) +
                                  " lies on more than one cycle");
    }
    for (EdgeId e : block) out.cycle_of_edge[e] = out.cycles.size();
    out.cycles.push_back(order_cycle(g, block));
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

GraphClass classify(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m + 1 == n) return GraphClass::Tree;
  if (m == n) return GraphClass::Unicyclic;
  try {
    cycle_decomposition(g);
    return GraphClass::Cactus;
  } catch (const UnsupportedGraphClass&) {
    return GraphClass::General;
  }
}

std::optional<EdgeId> long_edge(const Graph& g, const Cycle& c) {
  for (EdgeId e : c.edges) {
    if (2 * g.edge(e).weight > c.total_length) return e;
  }
  return std::nullopt;
}

PathResult shortest_path(const Graph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw std::out_of_range("shortest_path: vertex out of range");
  }
  auto always = [](VertexId) { return true; };
  const auto to_v = detail::dijkstra(g, v, always, always);
  return {*to_v[u], detail::lexicographic_path(g, to_v, u, v)};
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t parse_count(std::string_view word, std::size_t line_no) {
  const Integer value = numerator_of(parse_rational(word));
  if (word.find('/') != std::string_view::npos || value < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(word) + "'");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n, m;
  VertexId start = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    if (words.front() == "graph") {
      if (n) throw ParseError("line " + std::to_string(line_no) + ": duplicate graph header");
      if (words.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": malformed header");
      n = parse_count(words[1], line_no);
      m = parse_count(words[2], line_no);
      start = static_cast<VertexId>(parse_count(words[3], line_no));
    } else if (words.front() == "edge") {
      if (!n) throw ParseError("line " + std::to_string(line_no) + ": edge before graph header");
      if (words.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": malformed edge");
      if (words[3].find('/') == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": weight must be <num>/<den>");
      }
      edges.push_back({static_cast<VertexId>(parse_count(words[1], line_no)),
                       static_cast<VertexId>(parse_count(words[2], line_no)),
                       parse_rational(words[3])});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" +
                       std::string(words.front()) + "'");
    }
  }
  if (!n) throw ParseError("missing graph header");
  if (edges.size() != *m) {
    throw ParseError("header declares " + std::to_string(*m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(*n, std::move(edges), start);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.start() << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << e.u << ' ' << e.v << ' ' << to_exact_string(e.weight) << '\n';
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace explore
