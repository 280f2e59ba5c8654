#include "explore/errors.hpp"
#include "explore/generators.hpp"
#include "explore/harness.hpp"
#include "explore/opt.hpp"
#include "explore/reproduce.hpp"
#include "explore/strategies.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace explore;

namespace {

std::vector<std::pair<std::string, std::string>> split_params(const std::vector<std::string>& items) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : items) {
    std::size_t begin = 0;
    while (begin <= item.size()) {
      const auto end = std::min(item.find(',', begin), item.size());
      const std::string part = item.substr(begin, end - begin);
      begin = end + 1;
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos || eq == 0) throw ConfigError("expected key=value, got '" + part + "'");
      out.emplace_back(part.substr(0, eq), part.substr(eq + 1));
    }
  }
  return out;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open graph " + path);
  return read_graph(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online graph exploration: strategies, optimal tours and instance generators"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an experiment config and print a report");
  std::string config_path, format = "table", report_path;
  run->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
  run->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  run->add_flag_callback("--csv", [&] { format = "csv"; }, "Shorthand for --format csv");
  run->add_option("--out", report_path, "Write the report to a file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate an instance and its metadata sidecar");
  std::string family, out_path;
  std::vector<std::string> params;
  gen->add_option("--family", family, "gk, spiked-path, double-sp, sp-cycle, planar or random")->required();
  gen->add_option("--params", params, "key=value pairs, comma separated or repeated");
  gen->add_option("--out", out_path, "Graph file; metadata goes to <file>.meta");

  auto* opt = app.add_subcommand("opt", "Optimal closed tour of a graph file");
  std::string graph_path;
  bool exact = false;
  std::size_t limit = kDefaultExactLimit;
  opt->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  opt->add_flag("--exact", exact, "Use the exact subset DP even on cacti");
  opt->add_option("--limit", limit, "Vertex limit of the exact DP");

  auto* tour = app.add_subcommand("tour", "Run one strategy on a graph file");
  std::string strategy = "blocking", delta_text = "-1/2", trace_path, events_path;
  tour->add_option("--graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  tour->add_option("--strategy", strategy, "nn, dfs or blocking")->check(CLI::IsMember({"nn", "dfs", "blocking"}));
  tour->add_option("--delta", delta_text, "Blocking parameter, e.g. -1/2 or 1/sqrt(2)-1");
  tour->add_option("--trace", trace_path, "Write the traversal trace here");
  tour->add_option("--events", events_path, "Write the Blocking iteration log here");

  auto* reproduce = app.add_subcommand("reproduce", "Check every reproduction claim");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto rows = run_experiment(read_config_file(config_path));
      std::ofstream file;
      if (!report_path.empty()) file = open_output(report_path);
      std::ostream& out = report_path.empty() ? std::cout : file;
      if (format == "csv") write_csv(out, rows);
      else write_table(out, rows);
      return 0;
    }
    if (*gen) {
      const auto d = generate(family, split_params(params));
      if (out_path.empty()) {
        write_graph(std::cout, d.graph);
        return 0;
      }
      auto graph_out = open_output(out_path);
      write_graph(graph_out, d.graph);
      auto meta_out = open_output(out_path + ".meta");
      write_metadata(meta_out, d);
      std::cout << d.id() << ": " << d.graph.vertex_count() << " vertices, " << d.graph.edge_count()
                << " edges -> " << out_path << '\n';
      return 0;
    }
    if (*opt) {
      const Graph g = load_graph(graph_path);
      const bool use_exact = exact || classify(g) == GraphClass::General;
      const OptResult result = use_exact ? opt_exact(g, limit) : opt_cactus(g);
      std::cout << "opt " << to_compact_string(result.length) << " (" << to_decimal_string(result.length)
                << ") method " << to_string(result.method) << '\n';
      for (const auto& c : result.per_cycle_detail) {
        std::cout << "cycle length " << to_compact_string(c.cycle.total_length) << " edges " << c.cycle.edges.size()
                  << " long_edge " << (c.long_edge ? std::to_string(*c.long_edge) : std::string("none"))
                  << " contributes " << to_compact_string(c.contribution) << '\n';
      }
      return 0;
    }
    if (*tour) {
      const Graph g = load_graph(graph_path);
      Tour t;
      std::optional<BlockingRun> blocking;
      if (strategy == "nn") {
        t = run_nn(g);
      } else if (strategy == "dfs") {
        t = run_dfs(g);
      } else {
        blocking = run_blocking(g, {QuadraticNumber::parse(delta_text)});
        t = blocking->tour;
      }
      std::cout << strategy << " cost " << to_compact_string(t.total_cost) << " (" << to_decimal_string(t.total_cost)
                << ") steps " << t.steps.size() << (t.closed ? " closed" : " open") << '\n';
      if (blocking) {
        for (const auto& v : blocking->audit.violations) std::cout << "violation " << v.invariant << ": " << v.detail << '\n';
      }
      if (!trace_path.empty()) {
        auto out = open_output(trace_path);
        write_trace(out, t);
      }
      if (!events_path.empty()) {
        if (!blocking) throw ConfigError("--events needs --strategy blocking");
        auto out = open_output(events_path);
        write_event_log(out, *blocking);
      }
      return 0;
    }
    if (*reproduce) {
      const auto results = reproduce_all([](const ClaimResult& r) {
        std::cerr << "claim " << r.id << (r.pass ? " ok" : " FAILED") << '\n';
      });
      write_claims_table(std::cout, results);
      for (const auto& r : results) {
        if (!r.pass) return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
