#pragma once

#include "explore/graph.hpp"
#include "explore/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace explore {

/// A generated instance with its family, parameters, named vertex roles and
/// closed-form predictions (only where one is known exactly).
struct InstanceDescriptor {
  Graph graph;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::map<std::string, VertexId> named;
  std::map<std::string, Rational> predictions;

  /// e.g. "gk[k=3]".
  std::string id() const;
  std::string params_string() const;  // "k=3;m=2"
};

/// Metadata sidecar: `meta <key> <value>` lines covering family, params,
/// named vertices and predictions.
struct InstanceMetadata {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::map<std::string, VertexId> named;
  std::map<std::string, Rational> predictions;
};

void write_metadata(std::ostream& out, const InstanceDescriptor& d);
InstanceMetadata read_metadata(std::istream& in);

/// The recursive tree family on which Nearest Neighbor is Theta(log n) worse
/// than optimal. Vertex ids follow the order in which NN visits them, so that
/// smallest-id tie-breaking reproduces the adversarial tour.
/// Named: l_k, r_k, m_k. Predictions: nn_cost, opt, p_k, w_k, n.
InstanceDescriptor gen_gk(int k);

/// Spiked path SP_m for blocking parameter delta (rational, > -1):
/// a unit entry edge, m*k edges of length 1/k with spikes of length 1/k, then
/// the long edges l_1..l_m with |l_i| = (i + sum_{j<i} |l_j|) / (1 + delta),
/// where k = ceil(1 + delta) + 1. Path vertices get smaller ids than spike
/// tips, so Blocking walks straight to l_1 before touching any spike.
/// Start is the entry node. Predictions: k, non_l_total, l_total.
InstanceDescriptor gen_spiked_path(int m, const Rational& delta);

/// Two spiked paths closed into one cycle through two hubs:
///   s = entry(SP1) ... exit(SP1) - hub_right - entry(SP2) ... exit(SP2) - hub_left - s
/// with unit hub edges. The entry edge of SP1 out-ranks the edge to hub_left,
/// so Blocking enters SP1 first.
InstanceDescriptor gen_double_sp(int m, const Rational& delta);

/// One spiked path closed through a hub: s = entry ... exit - hub - s.
InstanceDescriptor gen_sp_cycle(int m, const Rational& delta);

/// Planar family: a path of m unit edges from s to p, plus m paths
/// s - x_j - y_j - p with weights 1, 1, m. n = 3m + 1. The unit path starts at
/// the smallest id so Blocking walks it first.
/// Predictions: opt = 6m - 2 (one long arm walked through, the rest out and
/// back), opt_upper = 6m, blocking_cost_lb = 2m^2, ratio_lb = m/3, n.
InstanceDescriptor gen_planar_lower(int m);

enum class RandomFamily { Tree, Unicyclic, Cactus };

std::string_view to_string(RandomFamily f);
RandomFamily parse_random_family(std::string_view name);

struct RandomSpec {
  RandomFamily family = RandomFamily::Tree;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::int64_t max_numerator = 10;   // weights are a/b with 1 <= a <= max_numerator
  std::int64_t max_denominator = 4;  // and 1 <= b <= max_denominator
};

/// Seeded random instance of the requested class. Unicyclic needs n >= 3;
/// cactus needs n >= 5 and always has at least two cycles.
InstanceDescriptor gen_random(const RandomSpec& spec);

/// Builds a named family from key=value parameters, as used by the CLI and
/// experiment configs. Families: gk, spiked-path, double-sp, sp-cycle,
/// planar, random.
InstanceDescriptor generate(std::string_view family,
                            const std::vector<std::pair<std::string, std::string>>& params);

}  // namespace explore
