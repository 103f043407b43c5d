#pragma once

#include <optional>
#include <vector>

#include "ghilb/ggraph.hpp"

namespace ghilb {

enum class CurveType { MinusOneMinusOne, ZeroMinusTwo, OneMinusThree, NonCompact };

std::string to_string(CurveType t);

enum class VertexKind { Boundary, Trivalent, Hirzebruch, DelPezzo6 };

std::string to_string(VertexKind k);

struct VertexRec {
  LatticePoint p;
  bool boundary = false;  // on the boundary of the junior simplex
  VertexKind kind = VertexKind::Boundary;
  std::vector<int> edges;  // incident edge ids
  std::vector<int> tris;   // incident triangle ids
};

struct EdgeRec {
  int v1 = -1, v2 = -1;  // v1 < v2
  std::array<int, 2> tri{-1, -1};
  int ntri = 0;
  bool compact = false;
  CurveType type = CurveType::NonCompact;
  int regular = -1;  // regular triangle containing this edge, when interior
};

struct TriRec {
  std::array<int, 3> v{};  // ascending vertex ids
  int graph = -1;          // id into fan.graphs
  int regular = -1;
};

// A regular triangle of the coarse decomposition: a side-ell lattice
// triangle standardly subdivided into ell^2 basic triangles.
struct RegularTriangle {
  std::vector<int> tris;
  std::array<int, 3> corners{};  // vertex ids, A,B,C with A smallest
  Int side = 1;
  bool meeting_of_champions = false;
  std::vector<int> corner_axes;  // which of e1,e2,e3 appear among corners
};

struct Complex {
  GroupData group;
  Fan fan;
  std::vector<VertexRec> vertices;
  std::vector<EdgeRec> edges;
  std::vector<TriRec> tris;
  std::vector<RegularTriangle> regulars;
  // trivalent interior vertex (side-zero meeting of champions), if any
  std::optional<int> trivalent_vertex;

  int edge_index(int v1, int v2) const;  // -1 if absent
  bool is_interior_vertex(int v) const { return !vertices[v].boundary; }
  // the two triangles adjacent to a compact edge
  std::pair<int, int> edge_tris(int e) const;
  // apex vertex of triangle t opposite to edge e
  int apex(int t, int e) const;
  // direction of edge e seen from vertex v, scaled integer triple
  std::array<Int, 3> direction_from(int e, int v) const;
};

// Builds the simplicial surface from a fan and classifies curves,
// regular triangles and vertices.
Complex build_complex(const Fan& fan);

// Normal-bundle type of a compact edge from the lattice relation
// u + u' = alpha*v1 + beta*v2 between the opposite apexes and the edge ends.
CurveType curve_type(const Complex& X, int e);

}  // namespace ghilb
