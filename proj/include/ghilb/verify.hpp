#pragma once

#include "ghilb/chamber.hpp"

namespace ghilb {

struct CheckOptions {
  bool with_walls = true;
  ChamberOptions chamber;
};

struct CheckReport {
  bool ok = false;
  std::string group;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  Int cones = 0;
  Int compact_edges = 0;
  Int walls = 0;
  Int inequalities = 0;
};

// Runs the whole pipeline for one group and validates every structural
// law: fan tiling, cluster properties, the marking cross-checks, the
// tautological relations, agreement of the unlocking procedure with the
// cluster oracle on every compact curve, the degree laws, and the wall
// census with both redundancy engines.
CheckReport run_full_check(const GroupData& G, const CheckOptions& opt = {});

// Canonical representatives of all faithful cyclic SL3 weight triples of
// order <= max_order, up to coordinate permutation and choice of generator.
std::vector<GroupData> sweep_groups(Int max_order);

}  // namespace ghilb
