#pragma once

#include "explore/generators.hpp"
#include "explore/opt.hpp"
#include "explore/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace explore {

enum class StrategyKind { NearestNeighbor, DepthFirst, Blocking };

struct StrategySpec {
  StrategyKind kind = StrategyKind::NearestNeighbor;
  QuadraticNumber delta;  // Blocking only

  std::string name() const;          // "nn", "dfs", "blocking"
  std::string delta_string() const;  // empty unless Blocking
};

/// One instance line after range expansion. The family "file" loads
/// `path=<graph file>` plus an optional `<graph file>.meta` sidecar.
struct InstanceSpec {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
};

enum class OptPolicy { Auto, Exact, Cactus };

struct ExperimentConfig {
  std::vector<InstanceSpec> instances;
  std::vector<StrategySpec> strategies;
  bool instrument = true;
  std::size_t exact_limit = kDefaultExactLimit;
  OptPolicy opt = OptPolicy::Auto;
  unsigned threads = 0;  // 0: hardware concurrency
  std::filesystem::path base_dir;  // relative file paths resolve against this
};

/// Line-oriented config:
///   instance <family> key=value ...   (integer values may be ranges a..b)
///   strategy nn | dfs | blocking delta=<value>
///   option instrument=on|off | exact_limit=<n> | opt=auto|exact|cactus | threads=<n>
/// Blank lines and lines starting with '#' are ignored.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig read_config_file(const std::filesystem::path& path);

InstanceDescriptor load_instance(const InstanceSpec& spec, const std::filesystem::path& base_dir = {});

struct OptValue {
  Rational length;
  std::string method;  // cactus-closed-form, exact-dp or prediction
};

/// auto: closed form on cacti, exact DP up to `exact_limit` vertices, then the
/// generator's exact opt prediction. Throws InstanceTooLarge otherwise.
OptValue resolve_opt(const InstanceDescriptor& d, OptPolicy policy, std::size_t exact_limit);

struct BoundCheck {
  std::string name;   // e.g. "ratio<=4+2delta"
  QuadraticNumber value;
  bool upper = true;  // ratio <= value, otherwise ratio >= value
  bool satisfied = false;
};

struct ReportRow {
  std::string instance;
  std::string family;
  std::string params;
  std::string strategy;
  std::string delta;
  Rational cost;
  Rational opt;
  std::string opt_method;
  Rational ratio;
  bool complete = false;
  std::optional<BoundCheck> bound;
  std::vector<std::string> violations;

  /// Tour closed, cost >= opt, the bound (if any) holds and no audit failed.
  bool ok() const;
};

/// The competitive bound that applies to a row, if one is known.
std::optional<BoundCheck> applicable_bound(const InstanceDescriptor& d, const StrategySpec& s,
                                           const Rational& ratio);

ReportRow evaluate(const InstanceDescriptor& d, const StrategySpec& s, const OptValue& opt,
                   bool instrument = true);

/// One row per (instance, strategy), computed in parallel and ordered by
/// instance, then strategy, in config order.
std::vector<ReportRow> run_experiment(const ExperimentConfig& config);

/// instance,family,params,strategy,delta,cost,opt,ratio,bounds_ok
void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
/// Aligned text table with ratios rounded to 6 significant digits.
void write_table(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace explore
