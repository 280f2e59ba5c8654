#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace explore {

struct ClaimResult {
  int id = 0;
  std::string claim;
  std::string measured;
  std::string bound;
  bool pass = false;
  double seconds = 0;
};

/// Each check runs one reproduction claim end to end and times itself.
ClaimResult check_nn_formula();             // 1
ClaimResult check_nn_log_ratio();           // 2
ClaimResult check_gk_shortest_path();       // 3
ClaimResult check_unicyclic_upper_bound();  // 4
ClaimResult check_cactus_upper_bound();     // 5
ClaimResult check_lower_bound_gadget();     // 6
ClaimResult check_planar_degeneration();    // 7
ClaimResult check_dfs_equivalence();        // 8
ClaimResult check_opt_oracles_agree();      // 9
ClaimResult check_charge_bound();           // 10
ClaimResult check_long_edge_invariant();    // 11
ClaimResult check_completeness();           // 12

/// All checks in order. `progress` is called after each one.
std::vector<ClaimResult> reproduce_all(const std::function<void(const ClaimResult&)>& progress = {});

void write_claims_table(std::ostream& out, const std::vector<ClaimResult>& results);

}  // namespace explore
