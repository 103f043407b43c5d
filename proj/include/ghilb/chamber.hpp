#pragma once

#include <optional>
#include <string>

#include "ghilb/ratlp.hpp"
#include "ghilb/unlock.hpp"

namespace ghilb {

enum class WallType { I, III, Zero };

std::string to_string(WallType t);

struct IneqSource {
  enum Kind { Curve, Subsheaf, Quotient } kind = Curve;
  int edge = -1;              // Curve
  int vertex = -1;            // Subsheaf
  Int chi = -1;               // Subsheaf character
  std::vector<int> divisor;   // Quotient: connected set of interior vertices
};

// A homogeneous inequality sum_chi coeff[chi] * theta(chi) > 0 on the
// stability space, together with where it came from.
struct Inequality {
  std::vector<Int> coeff;  // indexed by character, coeff[0] == 0
  IneqSource source;
  std::string label;
};

// One conic-combination certificate: coeff == sum multiplier * distinct[j].
struct Certificate {
  std::vector<std::pair<Rat, int>> parts;  // (multiplier, distinct index)
  bool integral = true;
};

struct DistinctIneq {
  std::vector<Int> coeff;      // gcd-normalized representative
  std::vector<int> members;    // indices into WallReport::assembled
  bool wall = false;
  WallType type = WallType::Zero;
  std::optional<Certificate> certificate;  // present when redundant
  std::vector<Rat> facet_witness;          // present when wall
};

struct GeneralisedLongSide {
  Int chi;
  std::vector<int> edges;        // the whole chain
  std::vector<int> final_edges;  // one or two
  std::vector<Int> wall_coeff;   // theta(chi) + sum over divisors on the chain
};

struct WallReport {
  GroupData group;
  std::vector<Inequality> assembled;  // curves, subsheaf, listed quotients
  std::vector<DistinctIneq> distinct;
  std::vector<int> walls;  // indices into distinct, canonical order
  std::vector<std::vector<int>> wall_edges;    // E(w) per wall
  std::vector<std::vector<int>> wall_divisor;  // D' per wall
  std::vector<GeneralisedLongSide> long_sides;
  Int quotient_count = 0;  // connected divisor subsets enumerated
  int n_minus11 = 0;       // flop curves
  int n_gls = 0;           // generalised long sides
  std::vector<Int> gls_chars;
  std::vector<std::string> warnings;

  const DistinctIneq& of(const Inequality& i) const;
  int distinct_index(const std::vector<Int>& coeff) const;
};

struct ChamberOptions {
  // cap on |D'| for quotient enumeration; 0 means unlimited (up to the
  // built-in safety threshold of 20 interior vertices)
  int max_quotient_size = 0;
};

Inequality curve_inequality(const Complex& X, const Marking& M, Unlocker& U, int edge);
std::vector<Inequality> subsheaf_inequalities(const Complex& X, const Marking& M);
Inequality quotient_inequality(const Complex& X, const Marking& M, Unlocker& U,
                               const std::vector<int>& divisor);

std::vector<GeneralisedLongSide> generalised_long_sides(const Complex& X, const Marking& M);

// Assembles every inequality, removes duplicates, decides redundancy twice
// (conic decomposition and facet test) and classifies the walls.
WallReport compute_walls(const Complex& X, const Marking& M, Unlocker& U,
                         const ChamberOptions& opt = {});

// Recomputes the certificate sum of a redundant inequality.
bool verify_certificate(const WallReport& report, int distinct_index);

}  // namespace ghilb
