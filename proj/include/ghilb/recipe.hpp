#pragma once

#include <vector>

#include "ghilb/complex.hpp"

namespace ghilb {

// Character labels on compact edges and interior vertices, the invariant
// ratio of each compact edge, and the chain decomposition of the labels.
struct Marking {
  // per edge; -1 for non-compact edges
  std::vector<Int> edge_char;
  // per edge, m1/m2 with m1 lexicographically larger
  std::vector<std::pair<Monomial, Monomial>> edge_ratio;
  // per vertex: one character for Hirzebruch / trivalent divisors, two for
  // del Pezzo divisors, empty for boundary vertices; ascending
  std::vector<std::vector<Int>> vertex_marks;
  // chain_edges[chi]: all edges marked chi, ascending edge ids
  std::vector<std::vector<int>> chain_edges;
};

// A chain: the set of edges carrying one character.  Always a connected
// acyclic subgraph of the one-skeleton.
struct Chain {
  Int chi = -1;
  std::vector<int> edges;
  std::vector<int> vertices;  // all endpoint vertices, ascending
};

// Marks every compact edge with the character of its invariant ratio and
// every interior vertex with the intersection of the socles of its incident
// clusters; validates the tensor rules relating the two.
Marking mark_all(const Complex& X);

// The chi-chain; throws invariant_error if chi marks no edge, or if the
// marked edges are disconnected or contain a cycle.
Chain chain_of(const Complex& X, const Marking& M, Int chi);

// Vertices lying in the interior of the chi-chain (at least two incident
// chain edges).
std::vector<int> chain_interior_vertices(const Complex& X, const Marking& M, Int chi);

// The character of the del Pezzo divisor at vertex d selected by the curve e:
// the unique mark phi of d whose generator is divisible by the generator of
// the curve character on both triangles adjacent to e.
Int chi_dp(const Complex& X, const Marking& M, int e, int d);

// Checks the multiplicative relations between tautological generators at
// every interior vertex on every incident triangle.
void check_tautological_relations(const Complex& X, const Marking& M);

}  // namespace ghilb
