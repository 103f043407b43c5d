#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ghilb/recipe.hpp"

namespace ghilb {

// Oriented chain segment between consecutive quiver vertices.
struct QuiverArrow {
  int tail_vertex = -1;  // -1 for the base point on the input edge
  int head_vertex = -1;
  std::vector<int> edges;  // chain edges in walk order
};

// The chain of an input curve viewed as a quiver: Hirzebruch divisors as
// vertices, chain segments as arrows oriented away from the curve (interior
// case) or from the far endpoint of the curve toward the end of the bent
// part (boundary case).
struct ChainQuiver {
  int base_edge = -1;
  bool boundary_case = false;
  // boundary-curve combinatorics: corner axis, near/far curve endpoints,
  // end of the straight run, end of the bent run
  int corner_axis = -1;
  int v1 = -1, v2 = -1, v_c = -1, v_c_prime = -1;
  std::vector<int> run_edges;         // straight part through the corner ray
  std::vector<int> divisor_vertices;  // Hirzebruch divisors on the quiver
  std::vector<QuiverArrow> arrows;
};

ChainQuiver xi_quiver(const Complex& X, const Marking& M, int edge);

// Divisors downstream of a curve and, per divisor, the curves whose puzzles
// the curve unlocks.
struct Downstream {
  std::vector<int> divisors;                  // vertex ids, ascending
  std::map<int, std::vector<int>> curves;     // divisor vertex -> edge ids
};

Downstream downstream(const Complex& X, const Marking& M, int edge);

enum class PieceStep : char { Chain, DelPezzo, Divisor, Recursion };

struct PieceEntry {
  Int chi;
  PieceStep step;
  int via = -1;  // divisor vertex (DelPezzo/Divisor) or unlocked edge (Recursion)
};

// The total G-igsaw piece of a curve as computed by the unlocking
// procedure, with one provenance entry per contributed character.
struct GigsawPiece {
  int edge = -1;
  std::vector<Int> chars;  // ascending, contains the curve character
  std::vector<PieceEntry> trace;

  bool has(Int chi) const;
};

// Memoizing driver for the unlocking procedure.  Detects recursion cycles
// (which would contradict the termination of the procedure) and reports
// them as internal errors.
class Unlocker {
 public:
  Unlocker(const Complex& X, const Marking& M);

  const GigsawPiece& unlock(int edge);

  const Complex& complex() const { return X_; }
  const Marking& marking() const { return M_; }

 private:
  const Complex& X_;
  const Marking& M_;
  std::vector<std::optional<GigsawPiece>> memo_;
  std::vector<char> in_progress_;
};

}  // namespace ghilb
