#include "explore/harness.hpp"

#include "explore/errors.hpp"
#include "explore/strategies.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace explore {

std::string StrategySpec::name() const {
  switch (kind) {
    case StrategyKind::NearestNeighbor: return "nn";
    case StrategyKind::DepthFirst: return "dfs";
    case StrategyKind::Blocking: return "blocking";
  }
  return "nn";
}

std::string StrategySpec::delta_string() const {
  return kind == StrategyKind::Blocking ? delta.to_string() : std::string();
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::pair<std::string, std::string> split_assignment(const std::string& word, std::size_t line_no) {
  const auto eq = word.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("line " + std::to_string(line_no) + ": expected key=value, got '" + word + "'");
  }
  return {word.substr(0, eq), word.substr(eq + 1)};
}

// "3..6" -> {"3","4","5","6"}; anything else is a single value.
std::vector<std::string> expand_range(const std::string& value, std::size_t line_no) {
  const auto dots = value.find("..");
  if (dots == std::string::npos) return {value};
  long long lo = 0, hi = 0;
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string a = value.substr(0, dots), b = value.substr(dots + 2);
    lo = std::stoll(a, &used_lo);
    hi = std::stoll(b, &used_hi);
    if (used_lo != a.size() || used_hi != b.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line_no) + ": bad range '" + value + "'");
  }
  if (hi < lo) throw ConfigError("line " + std::to_string(line_no) + ": empty range '" + value + "'");
  std::vector<std::string> out;
  for (long long v = lo; v <= hi; ++v) out.push_back(std::to_string(v));
  return out;
}

bool parse_switch(const std::string& value, std::size_t line_no) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw ConfigError("line " + std::to_string(line_no) + ": expected on/off, got '" + value + "'");
}

std::size_t parse_count(const std::string& value, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                      value + "'");
  }
}

void parse_instance(const std::vector<std::string>& words, std::size_t line_no, ExperimentConfig& config) {
  if (words.size() < 2) throw ConfigError("line " + std::to_string(line_no) + ": instance needs a family");
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  for (std::size_t i = 2; i < words.size(); ++i) {
    auto [key, value] = split_assignment(words[i], line_no);
    axes.emplace_back(key, key == "path" ? std::vector<std::string>{value} : expand_range(value, line_no));
  }
  // Cartesian product, first key varying slowest.
  std::vector<std::size_t> index(axes.size(), 0);
  while (true) {
    InstanceSpec spec{words[1], {}};
    for (std::size_t a = 0; a < axes.size(); ++a) spec.params.emplace_back(axes[a].first, axes[a].second[index[a]]);
    config.instances.push_back(std::move(spec));
    std::size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++index[a] < axes[a].second.size()) break;
      index[a] = 0;
      if (a == 0) return;
    }
    if (axes.empty()) return;
  }
}

void parse_strategy(const std::vector<std::string>& words, std::size_t line_no, ExperimentConfig& config) {
  if (words.size() < 2) throw ConfigError("line " + std::to_string(line_no) + ": strategy needs a name");
  const std::string& name = words[1];
  StrategySpec s;
  if (name == "nn" || name == "dfs") {
    if (words.size() > 2) throw ConfigError("line " + std::to_string(line_no) + ": " + name + " takes no parameters");
    s.kind = name == "nn" ? StrategyKind::NearestNeighbor : StrategyKind::DepthFirst;
    config.strategies.push_back(s);
    return;
  }
  if (name != "blocking") throw ConfigError("line " + std::to_string(line_no) + ": unknown strategy '" + name + "'");
  s.kind = StrategyKind::Blocking;
  bool have_delta = false;
  for (std::size_t i = 2; i < words.size(); ++i) {
    auto [key, value] = split_assignment(words[i], line_no);
    if (key != "delta") throw ConfigError("line " + std::to_string(line_no) + ": unknown blocking parameter '" + key + "'");
    try {
      s.delta = QuadraticNumber::parse(value);
    } catch (const std::exception& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": bad delta '" + value + "': " + e.what());
    }
    have_delta = true;
  }
  if (!have_delta) throw ConfigError("line " + std::to_string(line_no) + ": blocking needs delta=<value>");
  config.strategies.push_back(s);
}

void parse_option(const std::vector<std::string>& words, std::size_t line_no, ExperimentConfig& config) {
  for (std::size_t i = 1; i < words.size(); ++i) {
    auto [key, value] = split_assignment(words[i], line_no);
    if (key == "instrument") {
      config.instrument = parse_switch(value, line_no);
    } else if (key == "exact_limit") {
      config.exact_limit = parse_count(value, line_no);
    } else if (key == "threads") {
      config.threads = static_cast<unsigned>(parse_count(value, line_no));
    } else if (key == "opt") {
      if (value == "auto") config.opt = OptPolicy::Auto;
      else if (value == "exact") config.opt = OptPolicy::Exact;
      else if (value == "cactus") config.opt = OptPolicy::Cactus;
      else throw ConfigError("line " + std::to_string(line_no) + ": opt must be auto, exact or cactus");
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown option '" + key + "'");
    }
  }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  ExperimentConfig config;
  config.base_dir = base_dir;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;
    if (words[0] == "instance") parse_instance(words, line_no, config);
    else if (words[0] == "strategy") parse_strategy(words, line_no, config);
    else if (words[0] == "option") parse_option(words, line_no, config);
    else throw ConfigError("line " + std::to_string(line_no) + ": unknown directive '" + words[0] + "'");
  }
  return config;
}

ExperimentConfig read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse_config(in, path.parent_path());
}

InstanceDescriptor load_instance(const InstanceSpec& spec, const std::filesystem::path& base_dir) {
  if (spec.family != "file") return generate(spec.family, spec.params);
  std::optional<std::string> path_text;
  for (const auto& [k, v] : spec.params) {
    if (k == "path") path_text = v;
    else throw ConfigError("unknown parameter '" + k + "' for family file");
  }
  if (!path_text) throw ConfigError("file instance needs path=<graph file>");
  std::filesystem::path path(*path_text);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open graph " + path.string());
  InstanceDescriptor d{read_graph(in), "file", spec.params, {}, {}};
  std::ifstream meta_in(path.string() + ".meta");
  if (meta_in) {
    InstanceMetadata meta = read_metadata(meta_in);
    if (!meta.family.empty()) {
      d.family = meta.family;
      d.params = std::move(meta.params);
    }
    d.named = std::move(meta.named);
    d.predictions = std::move(meta.predictions);
  }
  return d;
}

OptValue resolve_opt(const InstanceDescriptor& d, OptPolicy policy, std::size_t exact_limit) {
  switch (policy) {
    case OptPolicy::Cactus:
      return {opt_cactus(d.graph).length, std::string(to_string(OptMethod::CactusClosedForm))};
    case OptPolicy::Exact:
      return {opt_exact(d.graph, exact_limit).length, std::string(to_string(OptMethod::ExactDp))};
    case OptPolicy::Auto:
      break;
  }
  if (classify(d.graph) != GraphClass::General) {
    return {opt_cactus(d.graph).length, std::string(to_string(OptMethod::CactusClosedForm))};
  }
  if (d.graph.vertex_count() <= exact_limit) {
    return {opt_exact(d.graph, exact_limit).length, std::string(to_string(OptMethod::ExactDp))};
  }
  if (const auto it = d.predictions.find("opt"); it != d.predictions.end()) return {it->second, "prediction"};
  throw InstanceTooLarge(d.id() + " is not a cactus, has " + std::to_string(d.graph.vertex_count()) +
                         " vertices (exact limit " + std::to_string(exact_limit) + ") and no opt prediction");
}

namespace {

// (delta^2 + delta/2) / (1 + delta)
QuadraticNumber negative_delta_term(const QuadraticNumber& delta) {
  return (delta * delta + delta / QuadraticNumber(2)) / (QuadraticNumber(1) + delta);
}

std::optional<int> exact_log2(const Integer& value) {
  if (value <= 0) return std::nullopt;
  Integer v = value;
  int bits = 0;
  while (v > 1) {
    if (v % 2 != 0) return std::nullopt;
    v /= 2;
    ++bits;
  }
  return bits;
}

const std::string* param_of(const InstanceDescriptor& d, std::string_view key) {
  for (const auto& [k, v] : d.params) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace

std::optional<BoundCheck> applicable_bound(const InstanceDescriptor& d, const StrategySpec& s,
                                           const Rational& ratio) {
  const QuadraticNumber r(ratio);
  if (s.kind == StrategyKind::NearestNeighbor && d.family == "gk") {
    const auto bits = exact_log2(Integer(d.graph.vertex_count() + 1));
    if (!bits) return std::nullopt;
    const QuadraticNumber lb(Rational(*bits + 1, 6));
    return BoundCheck{"ratio>=(log2(n+1)+1)/6", lb, false, r >= lb};
  }
  if (s.kind != StrategyKind::Blocking) return std::nullopt;
  const QuadraticNumber& delta = s.delta;

  if (d.family == "planar" && delta.sign() <= 0) {
    const auto* m = param_of(d, "m");
    if (!m) return std::nullopt;
    const QuadraticNumber lb(Rational(std::stoll(*m), 3));
    return BoundCheck{"ratio>=m/3", lb, false, r >= lb};
  }
  if (delta <= QuadraticNumber(-1)) return std::nullopt;
  const GraphClass cls = classify(d.graph);
  if (cls == GraphClass::General) return std::nullopt;

  const QuadraticNumber linear = QuadraticNumber(4) + QuadraticNumber(2) * delta;
  if (delta.sign() > 0) return BoundCheck{"ratio<=4+2delta", linear, true, r <= linear};
  if (cls == GraphClass::Unicyclic) {
    const QuadraticNumber alt = QuadraticNumber(3) + negative_delta_term(delta);
    const QuadraticNumber ub = std::max(linear, alt);
    return BoundCheck{"ratio<=max(4+2delta,3+(delta^2+delta/2)/(1+delta))", ub, true, r <= ub};
  }
  const QuadraticNumber ub = QuadraticNumber(4) + negative_delta_term(delta);
  return BoundCheck{"ratio<=4+(delta^2+delta/2)/(1+delta)", ub, true, r <= ub};
}

bool ReportRow::ok() const {
  return complete && cost >= opt && (!bound || bound->satisfied) && violations.empty();
}

ReportRow evaluate(const InstanceDescriptor& d, const StrategySpec& s, const OptValue& opt, bool instrument) {
  if (opt.length <= 0 && d.graph.vertex_count() > 1) throw Error(d.id() + ": optimum must be positive");
  ReportRow row;
  row.instance = d.id();
  row.family = d.family;
  row.params = d.params_string();
  row.strategy = s.name();
  row.delta = s.delta_string();
  row.opt = opt.length;
  row.opt_method = opt.method;

  switch (s.kind) {
    case StrategyKind::NearestNeighbor: {
      const Tour t = run_nn(d.graph);
      row.cost = t.total_cost;
      row.complete = t.closed;
      break;
    }
    case StrategyKind::DepthFirst: {
      const Tour t = run_dfs(d.graph);
      row.cost = t.total_cost;
      row.complete = t.closed;
      break;
    }
    case StrategyKind::Blocking: {
      const BlockingRun run = run_blocking(d.graph, {s.delta}, {instrument});
      row.cost = run.tour.total_cost;
      row.complete = run.complete;
      for (const auto& v : run.audit.violations) row.violations.push_back(v.invariant + ": " + v.detail);
      break;
    }
  }
  // A single vertex has an empty optimal tour; report ratio 1 for it.
  row.ratio = row.opt > 0 ? row.cost / row.opt : Rational(1);
  row.bound = applicable_bound(d, s, row.ratio);
  if (row.cost < row.opt) row.violations.push_back("cost below optimum");
  return row;
}

namespace {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<ReportRow> run_experiment(const ExperimentConfig& config) {
  if (config.strategies.empty()) return {};
  const std::size_t n_inst = config.instances.size();
  const std::size_t n_strat = config.strategies.size();
  std::vector<std::optional<InstanceDescriptor>> instances(n_inst);
  std::vector<OptValue> opts(n_inst);
  parallel_for(n_inst, config.threads, [&](std::size_t i) {
    instances[i] = load_instance(config.instances[i], config.base_dir);
    opts[i] = resolve_opt(*instances[i], config.opt, config.exact_limit);
  });
  std::vector<ReportRow> rows(n_inst * n_strat);
  parallel_for(rows.size(), config.threads, [&](std::size_t i) {
    rows[i] = evaluate(*instances[i / n_strat], config.strategies[i % n_strat], opts[i / n_strat],
                       config.instrument);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "instance,family,params,strategy,delta,cost,opt,ratio,bounds_ok\n";
  for (const auto& r : rows) {
    out << '"' << r.instance << "\"," << r.family << ",\"" << r.params << "\"," << r.strategy << ','
        << r.delta << ',' << to_compact_string(r.cost) << ',' << to_compact_string(r.opt) << ','
        << to_decimal_string(r.ratio) << ',' << (r.ok() ? "true" : "false") << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<ReportRow>& rows) {
  const std::vector<std::string> header{"instance", "strategy", "delta", "cost", "opt", "ratio", "bound", "ok"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::string bound = "-";
    if (r.bound) bound = (r.bound->upper ? "<= " : ">= ") + to_decimal_string(r.bound->value);
    cells.push_back({r.instance, r.strategy, r.delta.empty() ? "-" : r.delta, to_compact_string(r.cost),
                     to_compact_string(r.opt), to_decimal_string(r.ratio), bound, r.ok() ? "yes" : "NO"});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::left << std::setw(static_cast<int>(c + 1 == row.size() ? 0 : width[c])) << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  for (const auto& r : rows) {
    for (const auto& v : r.violations) out << r.instance << ' ' << r.strategy << ' ' << r.delta << ": " << v << '\n';
  }
}

}  // namespace explore
