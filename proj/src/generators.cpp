#include "explore/generators.hpp"

#include "explore/errors.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace explore {

std::string InstanceDescriptor::params_string() const {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + "=" + value;
  }
  return out;
}

std::string InstanceDescriptor::id() const {
  std::string out = family + "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += params[i].first + "=" + params[i].second;
  }
  return out + "]";
}

void write_metadata(std::ostream& out, const InstanceDescriptor& d) {
  out << "meta family " << d.family << '\n';
  for (const auto& [key, value] : d.params) out << "meta param." << key << ' ' << value << '\n';
  for (const auto& [role, v] : d.named) out << "meta named." << role << ' ' << v << '\n';
  for (const auto& [key, value] : d.predictions) {
    out << "meta predict." << key << ' ' << to_exact_string(value) << '\n';
  }
}

InstanceMetadata read_metadata(std::istream& in) {
  InstanceMetadata meta;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string tag, key, value;
    if (!(words >> tag) || tag.front() == '#') continue;
    if (tag != "meta" || !(words >> key >> value)) {
      throw ParseError("metadata line " + std::to_string(line_no) + " is malformed");
    }
    auto strip = [&](std::string_view prefix) -> std::optional<std::string> {
      if (key.rfind(prefix, 0) != 0) return std::nullopt;
      return key.substr(prefix.size());
    };
    if (key == "family") {
      meta.family = value;
    } else if (auto p = strip("param.")) {
      meta.params.emplace_back(*p, value);
    } else if (auto r = strip("named.")) {
      meta.named[*r] = static_cast<VertexId>(std::stoul(value));
    } else if (auto q = strip("predict.")) {
      meta.predictions[*q] = parse_rational(value);
    } else {
      throw ParseError("metadata line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return meta;
}

namespace {

struct Builder {
  std::vector<Edge> edges;
  VertexId count = 0;

  VertexId add() { return count++; }
  void connect(VertexId a, VertexId b, Rational w) { edges.push_back({a, b, std::move(w)}); }
  Graph build(VertexId start) { return Graph(count, std::move(edges), start); }
};

// --- G_k -------------------------------------------------------------------

struct GkParts {
  VertexId l, r, m;
};

// Ids are handed out in NN visiting order: G'_{k-1}, then G''_{k-1}, then m_k.
GkParts build_gk(Builder& b, int k) {
  if (k == 1) {
    const VertexId l = b.add(), r = b.add(), m = b.add();
    b.connect(l, r, 1);
    b.connect(r, m, 1);
    return {l, r, m};
  }
  const GkParts left = build_gk(b, k - 1);
  const GkParts right = build_gk(b, k - 1);
  const VertexId m = b.add();
  b.connect(left.r, right.l, k);
  b.connect(right.l, m, 1);
  return {left.l, right.r, m};
}

// --- spiked path -------------------------------------------------------------

struct SpikedPath {
  VertexId entry = 0;
  VertexId exit = 0;
  int k = 0;
  std::vector<Rational> long_edges;
  Rational non_long_total;
};

int spike_resolution(const Rational& delta) {
  return (ceil(Rational(1) + delta) + 1).convert_to<int>();
}

void check_spiked_params(int m, const Rational& delta) {
  if (m < 1) throw std::invalid_argument("spiked path needs m >= 1");
  if (delta <= -1) throw std::invalid_argument("spiked path needs delta > -1");
}

SpikedPath build_spiked_path(Builder& b, int m, const Rational& delta, const std::string& prefix,
                             std::map<std::string, VertexId>& named) {
  SpikedPath sp;
  sp.k = spike_resolution(delta);
  const int k = sp.k;
  const Rational step(1, k);

  sp.entry = b.add();
  std::vector<VertexId> path{b.add()};
  b.connect(sp.entry, path[0], 1);
  for (int j = 1; j <= m * k; ++j) {
    path.push_back(b.add());
    b.connect(path[j - 1], path[j], step);
  }
  std::vector<VertexId> ends{path.back()};
  Rational sum = 0;
  for (int i = 1; i <= m; ++i) {
    ends.push_back(b.add());
    Rational len = (Rational(i) + sum) / (Rational(1) + delta);
    sum += len;
    b.connect(ends[i - 1], ends[i], len);
    named[prefix + "l" + std::to_string(i) + ".from"] = ends[i - 1];
    named[prefix + "l" + std::to_string(i) + ".to"] = ends[i];
    sp.long_edges.push_back(std::move(len));
  }
  // Spike s_i hangs off path[1 + (m - i) k]: s_m right after the entry edge,
  // s_1 at distance 1 - 1/k before l_1, consecutive spikes 1 apart.
  for (int i = 1; i <= m; ++i) {
    const VertexId base = path[1 + (m - i) * k];
    const VertexId tip = b.add();
    b.connect(base, tip, step);
    named[prefix + "s" + std::to_string(i) + ".base"] = base;
    named[prefix + "s" + std::to_string(i) + ".tip"] = tip;
  }
  sp.exit = ends.back();
  sp.non_long_total = Rational(1) + Rational(m) * (Rational(1) + step);
  named[prefix + "entry"] = sp.entry;
  named[prefix + "exit"] = sp.exit;
  return sp;
}

std::string delta_text(const Rational& delta) { return to_compact_string(delta); }

}  // namespace

InstanceDescriptor gen_gk(int k) {
  if (k < 1) throw std::invalid_argument("G_k needs k >= 1");
  Builder b;
  const GkParts parts = build_gk(b, k);
  const Rational pow2 = Rational(Integer(1) << k);
  InstanceDescriptor d{b.build(parts.l), "gk", {{"k", std::to_string(k)}}, {}, {}};
  d.named = {{"l_k", parts.l}, {"r_k", parts.r}, {"m_k", parts.m}};
  d.predictions = {
      {"nn_cost", Rational(k + 2) * pow2 - 2},
      {"opt", 6 * pow2 - 2 * k - 6},
      {"p_k", 2 * pow2 - k - 2},
      {"w_k", 3 * pow2 - k - 3},
      {"n", 2 * pow2 - 1},
  };
  return d;
}

InstanceDescriptor gen_spiked_path(int m, const Rational& delta) {
  check_spiked_params(m, delta);
  Builder b;
  std::map<std::string, VertexId> named;
  const SpikedPath sp = build_spiked_path(b, m, delta, "", named);
  InstanceDescriptor d{b.build(sp.entry), "spiked-path",
                       {{"m", std::to_string(m)}, {"delta", delta_text(delta)}}, std::move(named), {}};
  const Rational l_total = std::accumulate(sp.long_edges.begin(), sp.long_edges.end(), Rational(0));
  d.predictions = {{"k", sp.k}, {"non_l_total", sp.non_long_total}, {"l_total", l_total}};
  return d;
}

InstanceDescriptor gen_double_sp(int m, const Rational& delta) {
  check_spiked_params(m, delta);
  Builder b;
  std::map<std::string, VertexId> named;
  const SpikedPath first = build_spiked_path(b, m, delta, "sp1.", named);
  const VertexId hub_right = b.add();
  const SpikedPath second = build_spiked_path(b, m, delta, "sp2.", named);
  const VertexId hub_left = b.add();
  b.connect(first.exit, hub_right, 1);
  b.connect(hub_right, second.entry, 1);
  b.connect(second.exit, hub_left, 1);
  b.connect(hub_left, first.entry, 1);
  named["s"] = first.entry;
  named["hub_left"] = hub_left;
  named["hub_right"] = hub_right;
  const Rational l_total = 2 * std::accumulate(first.long_edges.begin(), first.long_edges.end(), Rational(0));
  InstanceDescriptor d{b.build(first.entry), "double-sp",
                       {{"m", std::to_string(m)}, {"delta", delta_text(delta)}}, std::move(named), {}};
  d.predictions = {{"k", first.k}, {"l_total", l_total}};
  return d;
}

InstanceDescriptor gen_sp_cycle(int m, const Rational& delta) {
  check_spiked_params(m, delta);
  Builder b;
  std::map<std::string, VertexId> named;
  const SpikedPath sp = build_spiked_path(b, m, delta, "", named);
  const VertexId hub = b.add();
  b.connect(sp.exit, hub, 1);
  b.connect(hub, sp.entry, 1);
  named["s"] = sp.entry;
  named["hub"] = hub;
  const Rational l_total = std::accumulate(sp.long_edges.begin(), sp.long_edges.end(), Rational(0));
  InstanceDescriptor d{b.build(sp.entry), "sp-cycle",
                       {{"m", std::to_string(m)}, {"delta", delta_text(delta)}}, std::move(named), {}};
  d.predictions = {{"k", sp.k}, {"l_total", l_total}};
  return d;
}

InstanceDescriptor gen_planar_lower(int m) {
  if (m < 1) throw std::invalid_argument("planar family needs m >= 1");
  Builder b;
  const VertexId s = b.add();
  VertexId prev = s;
  for (int i = 1; i <= m; ++i) {
    const VertexId next = b.add();
    b.connect(prev, next, 1);
    prev = next;
  }
  const VertexId p = prev;
  for (int j = 1; j <= m; ++j) {
    const VertexId x = b.add();
    const VertexId y = b.add();
    b.connect(s, x, 1);
    b.connect(x, y, 1);
    b.connect(y, p, m);
  }
  InstanceDescriptor d{b.build(s), "planar", {{"m", std::to_string(m)}}, {{"s", s}, {"p", p}}, {}};
  d.predictions = {
      {"opt", 6 * m - 2},
      {"opt_upper", 6 * m},
      {"blocking_cost_lb", 2 * m * m},
      {"ratio_lb", Rational(m, 3)},
      {"n", 3 * m + 1},
  };
  return d;
}

std::string_view to_string(RandomFamily f) {
  switch (f) {
    case RandomFamily::Tree: return "tree";
    case RandomFamily::Unicyclic: return "unicyclic";
    case RandomFamily::Cactus: return "cactus";
  }
  return "tree";
}

RandomFamily parse_random_family(std::string_view name) {
  if (name == "tree") return RandomFamily::Tree;
  if (name == "unicyclic") return RandomFamily::Unicyclic;
  if (name == "cactus") return RandomFamily::Cactus;
  throw std::invalid_argument("unknown random family '" + std::string(name) + "'");
}

namespace {

struct TreeSkeleton {
  std::vector<VertexId> parent;  // parent[0] unused
  std::vector<std::size_t> depth;
};

TreeSkeleton random_tree(std::size_t n, std::mt19937_64& rng) {
  TreeSkeleton t{std::vector<VertexId>(n, 0), std::vector<std::size_t>(n, 0)};
  for (VertexId v = 1; v < n; ++v) {
    t.parent[v] = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
    t.depth[v] = t.depth[t.parent[v]] + 1;
  }
  return t;
}

// Tree edges on the u-v path, identified by their child endpoint.
std::vector<VertexId> tree_path(const TreeSkeleton& t, VertexId u, VertexId v) {
  std::vector<VertexId> up;
  while (u != v) {
    if (t.depth[u] >= t.depth[v]) {
      up.push_back(u);
      u = t.parent[u];
    } else {
      up.push_back(v);
      v = t.parent[v];
    }
  }
  return up;
}

}  // namespace

InstanceDescriptor gen_random(const RandomSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("random instance needs n >= 1");
  if (spec.family == RandomFamily::Unicyclic && spec.n < 3) {
    throw std::invalid_argument("unicyclic instance needs n >= 3");
  }
  if (spec.family == RandomFamily::Cactus && spec.n < 5) {
    throw std::invalid_argument("cactus instance with two cycles needs n >= 5");
  }
  if (spec.max_numerator < 1 || spec.max_denominator < 1) {
    throw std::invalid_argument("weight bounds must be positive");
  }
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.n;
  auto weight = [&] {
    const auto num = std::uniform_int_distribution<std::int64_t>(1, spec.max_numerator)(rng);
    const auto den = std::uniform_int_distribution<std::int64_t>(1, spec.max_denominator)(rng);
    return Rational(num, den);
  };

  std::vector<std::pair<VertexId, VertexId>> pairs;
  while (true) {
    pairs.clear();
    const TreeSkeleton tree = random_tree(n, rng);
    for (VertexId v = 1; v < n; ++v) pairs.emplace_back(tree.parent[v], v);
    if (spec.family == RandomFamily::Tree) break;

    std::set<std::pair<VertexId, VertexId>> present;
    for (auto [a, b] : pairs) present.insert(std::minmax(a, b));
    std::vector<bool> used(n, false);  // tree edge (parent[v], v) already on a cycle
    const std::size_t wanted =
        spec.family == RandomFamily::Unicyclic
            ? 1
            : std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, (n - 1) / 2))(rng);
    std::size_t made = 0;
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    for (std::size_t attempt = 0; attempt < 40 * n && made < wanted; ++attempt) {
      const VertexId u = pick(rng), v = pick(rng);
      if (u == v || present.contains(std::minmax(u, v))) continue;
      const auto path = tree_path(tree, u, v);
      if (std::any_of(path.begin(), path.end(), [&](VertexId c) { return used[c]; })) continue;
      for (VertexId c : path) used[c] = true;
      present.insert(std::minmax(u, v));
      pairs.emplace_back(u, v);
      ++made;
    }
    if (made == wanted || (spec.family == RandomFamily::Cactus && made >= 2)) break;
  }

  // Relabel so that ids carry no structural information.
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({label[a], label[b], weight()});

  InstanceDescriptor d{Graph(n, std::move(edges), 0),
                       "random",
                       {{"family", std::string(to_string(spec.family))},
                        {"n", std::to_string(n)},
                        {"seed", std::to_string(spec.seed)},
                        {"maxnum", std::to_string(spec.max_numerator)},
                        {"maxden", std::to_string(spec.max_denominator)}},
                       {},
                       {}};
  return d;
}

namespace {

const std::string* find_param(const std::vector<std::pair<std::string, std::string>>& params,
                              std::string_view key) {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string require_param(const std::vector<std::pair<std::string, std::string>>& params,
                          std::string_view key, std::string_view family) {
  const auto* v = find_param(params, key);
  if (!v) throw ConfigError(std::string(family) + " needs parameter '" + std::string(key) + "'");
  return *v;
}

long long to_integer(const std::string& text, std::string_view key) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + std::string(key) + "' must be an integer, got '" + text + "'");
  }
}

void reject_unknown(const std::vector<std::pair<std::string, std::string>>& params,
                    std::initializer_list<std::string_view> allowed, std::string_view family) {
  for (const auto& [k, v] : params) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw ConfigError("unknown parameter '" + k + "' for family " + std::string(family));
    }
  }
}

}  // namespace

InstanceDescriptor generate(std::string_view family,
                            const std::vector<std::pair<std::string, std::string>>& params) {
  try {
    if (family == "gk") {
      reject_unknown(params, {"k"}, family);
      return gen_gk(static_cast<int>(to_integer(require_param(params, "k", family), "k")));
    }
    if (family == "planar") {
      reject_unknown(params, {"m"}, family);
      return gen_planar_lower(static_cast<int>(to_integer(require_param(params, "m", family), "m")));
    }
    if (family == "spiked-path" || family == "double-sp" || family == "sp-cycle") {
      reject_unknown(params, {"m", "delta"}, family);
      const int m = static_cast<int>(to_integer(require_param(params, "m", family), "m"));
      const Rational delta = parse_rational(require_param(params, "delta", family));
      if (family == "spiked-path") return gen_spiked_path(m, delta);
      if (family == "double-sp") return gen_double_sp(m, delta);
      return gen_sp_cycle(m, delta);
    }
    if (family == "random") {
      reject_unknown(params, {"family", "n", "seed", "maxnum", "maxden"}, family);
      RandomSpec spec;
      spec.family = parse_random_family(require_param(params, "family", family));
      spec.n = static_cast<std::size_t>(to_integer(require_param(params, "n", family), "n"));
      if (const auto* s = find_param(params, "seed")) spec.seed = static_cast<std::uint64_t>(to_integer(*s, "seed"));
      if (const auto* s = find_param(params, "maxnum")) spec.max_numerator = to_integer(*s, "maxnum");
      if (const auto* s = find_param(params, "maxden")) spec.max_denominator = to_integer(*s, "maxden");
      return gen_random(spec);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown instance family '" + std::string(family) + "'");
}

}  // namespace explore
