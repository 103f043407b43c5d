#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghilb {

using Rat = boost::multiprecision::cpp_rational;

// One linear condition a.x >= b, or a.x == b when equality is set.
struct LinearConstraint {
  std::vector<Rat> a;
  Rat b = 0;
  bool equality = false;
};

// Exact feasibility over free rational variables.  Returns a witness when
// the system is solvable.
std::optional<std::vector<Rat>> solve_feasibility(int nvars,
                                                  const std::vector<LinearConstraint>& cons);

// Nonnegative rational lambda with sum_i lambda_i * gens[i] == target,
// or nullopt when target lies outside the cone spanned by gens.
std::optional<std::vector<Rat>> conic_combination(const std::vector<std::vector<Rat>>& gens,
                                                  const std::vector<Rat>& target);

}  // namespace ghilb
