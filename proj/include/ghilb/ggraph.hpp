#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghilb/group.hpp"

namespace ghilb {

// Monomial basis of a torus-fixed G-cluster: exactly one monomial per
// character, closed under divisors, containing 1.
struct GGraph {
  std::vector<Monomial> basis;  // indexed by character

  friend bool operator==(const GGraph& a, const GGraph& b) { return a.basis == b.basis; }

  // true if m equals the basis monomial of its own character
  bool contains(const GroupData& G, const Monomial& m) const {
    return basis[G.character_of(m)] == m;
  }
};

// Full-dimensional cone of the fan, spanned by three junior points.
struct GraphCone {
  std::array<int, 3> rays;  // indices into Fan::junior, ascending
  // inward-pointing primitive facet normals in the dual lattice M;
  // facet_normals[i] vanishes on the two rays other than rays[i]
  std::array<std::array<Int, 3>, 3> facet_normals;
};

// The fan of the distinguished crepant resolution together with the
// G-graph attached to each maximal cone.
struct Fan {
  GroupData group;
  std::vector<LatticePoint> junior;  // all junior points, lex sorted
  std::vector<GGraph> graphs;        // graphs[i] belongs to cones[i]
  std::vector<GraphCone> cones;

  // one line per graph: monomials in character order
  std::string debug_dump() const;
};

// The v-minimal G-graph for a strictly positive integer weight vector v.
// Ties are broken lexicographically on exponents, so the result is defined
// for every positive v and deterministic.
GGraph minimal_graph(const GroupData& G, const std::array<Int, 3>& v);

// Enumerates all maximal cones by walking across interior facets starting
// from a generic weight vector.  Validates that the result tiles the cone
// spanned by e1,e2,e3 with unimodular cones, one per group element.
Fan walk_fan(const GroupData& G);

// Characters chi whose basis monomial m has x*m, y*m, z*m all outside the
// graph.
std::vector<Int> socle(const GroupData& G, const GGraph& g);

// Characters whose basis monomials differ between two adjacent graphs.
std::vector<Int> gigsaw_oracle(const GGraph& a, const GGraph& b);

// Primitive vector of the dual lattice M vanishing on p and q, unique up to
// sign.  Split as m1/m2 with m1 the positive part; by convention m1 is the
// lexicographically larger side.
void edge_ratio(const GroupData& G, const LatticePoint& p, const LatticePoint& q, Monomial& m1,
                Monomial& m2);

// For adjacent graphs a,b across the edge with invariant ratio m1/m2:
// every basis monomial moves by an integer power of the ratio.  Returns the
// per-character exponents, oriented so that the edge character (the
// character of m1) moves by +1.  Throws internal_error if the transformation
// does not have this shape.
std::vector<Int> gigsaw_degrees(const GroupData& G, const GGraph& a, const GGraph& b,
                                const Monomial& m1, const Monomial& m2);

}  // namespace ghilb
