#pragma once

#include "explore/graph.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace explore {

enum class OptMethod { CactusClosedForm, ExactDp };

std::string_view to_string(OptMethod m);

struct CycleContribution {
  Cycle cycle;
  std::optional<EdgeId> long_edge;
  Rational contribution;  // min(|C|, 2(|C| - max edge))
};

struct OptResult {
  Rational length;
  OptMethod method = OptMethod::CactusClosedForm;
  std::vector<CycleContribution> per_cycle_detail;  // empty for ExactDp
};

/// Optimal closed tour of a cactus: bridges are walked twice; a cycle with a
/// long edge is walked twice except for that edge, otherwise once around.
/// Throws UnsupportedGraphClass for general graphs.
OptResult opt_cactus(const Graph& g);

inline constexpr std::size_t kDefaultExactLimit = 14;

/// Exact optimum by dynamic programming over vertex subsets on the
/// shortest-path metric closure. Throws InstanceTooLarge above `limit` vertices.
OptResult opt_exact(const Graph& g, std::size_t limit = kDefaultExactLimit);

}  // namespace explore
