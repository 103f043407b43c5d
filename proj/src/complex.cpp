#include "ghilb/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ghilb {

std::string to_string(CurveType t) {
  switch (t) {
    case CurveType::MinusOneMinusOne: return "(-1,-1)";
    case CurveType::ZeroMinusTwo: return "(0,-2)";
    case CurveType::OneMinusThree: return "(1,-3)";
    case CurveType::NonCompact: return "non-compact";
  }
  return "?";
}

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Boundary: return "boundary";
    case VertexKind::Trivalent: return "P2";
    case VertexKind::Hirzebruch: return "Hirzebruch";
    case VertexKind::DelPezzo6: return "delPezzo6";
  }
  return "?";
}

int Complex::edge_index(int v1, int v2) const {
  if (v1 > v2) std::swap(v1, v2);
  for (int e : vertices[v1].edges)
    if (edges[e].v1 == v1 && edges[e].v2 == v2) return e;
  return -1;
}

std::pair<int, int> Complex::edge_tris(int e) const {
  if (edges[e].ntri != 2) throw std::invalid_argument("edge is not interior");
  return {edges[e].tri[0], edges[e].tri[1]};
}

int Complex::apex(int t, int e) const {
  for (int v : tris[t].v)
    if (v != edges[e].v1 && v != edges[e].v2) return v;
  throw internal_error("triangle does not contain the edge");
}

std::array<Int, 3> Complex::direction_from(int e, int v) const {
  int w = edges[e].v1 == v ? edges[e].v2 : edges[e].v1;
  const auto& a = vertices[v].p.num;
  const auto& b = vertices[w].p.num;
  return {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
}

namespace {

bool shares_zero_axis(const LatticePoint& p, const LatticePoint& q) {
  for (int axis = 0; axis < 3; ++axis)
    if (p.num[axis] == 0 && q.num[axis] == 0) return true;
  return false;
}

// solve u + u' = alpha*v1 + beta*v2 over the rationals and require
// integers with alpha + beta = 2
CurveType classify(const Complex& X, int e) {
  auto [t0, t1] = X.edge_tris(e);
  const auto& v1 = X.vertices[X.edges[e].v1].p.num;
  const auto& v2 = X.vertices[X.edges[e].v2].p.num;
  const auto& u = X.vertices[X.apex(t0, e)].p.num;
  const auto& up = X.vertices[X.apex(t1, e)].p.num;
  std::array<Int, 3> s{u[0] + up[0], u[1] + up[1], u[2] + up[2]};
  // pick two coordinates with a nonzero 2x2 determinant
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Int det = v1[i] * v2[j] - v1[j] * v2[i];
      if (det == 0) continue;
      Int na = s[i] * v2[j] - s[j] * v2[i];
      Int nb = v1[i] * s[j] - v1[j] * s[i];
      if (na % det != 0 || nb % det != 0)
        throw invariant_error("edge neighborhood is not unimodular");
      Int alpha = na / det, beta = nb / det;
      for (int k = 0; k < 3; ++k)
        if (alpha * v1[k] + beta * v2[k] != s[k])
          throw invariant_error("inconsistent apex relation at an edge");
      if (alpha + beta != 2) throw invariant_error("apex relation has wrong trace");
      Int lo = std::min(alpha, beta), hi = std::max(alpha, beta);
      if (lo == 1 && hi == 1) return CurveType::MinusOneMinusOne;
      if (lo == 0 && hi == 2) return CurveType::ZeroMinusTwo;
      if (lo == -1 && hi == 3) return CurveType::OneMinusThree;
      throw invariant_error("unexpected apex relation (" + std::to_string(alpha) + "," +
                            std::to_string(beta) + ")");
    }
  throw internal_error("edge endpoints are collinear");
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

CurveType curve_type(const Complex& X, int e) { return X.edges[e].type; }

Complex build_complex(const Fan& fan) {
  Complex X;
  X.group = fan.group;
  X.fan = fan;
  const Int r = X.group.order();

  X.vertices.resize(fan.junior.size());
  for (size_t i = 0; i < fan.junior.size(); ++i) {
    X.vertices[i].p = fan.junior[i];
    const auto& n = fan.junior[i].num;
    X.vertices[i].boundary = (n[0] == 0 || n[1] == 0 || n[2] == 0);
  }

  std::map<std::pair<int, int>, int> edge_ids;
  for (size_t t = 0; t < fan.cones.size(); ++t) {
    TriRec tri;
    tri.v = fan.cones[t].rays;
    tri.graph = (int)t;
    X.tris.push_back(tri);
  }
  for (size_t t = 0; t < X.tris.size(); ++t) {
    for (int f = 0; f < 3; ++f) {
      int a = X.tris[t].v[f], b = X.tris[t].v[(f + 1) % 3];
      if (a > b) std::swap(a, b);
      auto it = edge_ids.find({a, b});
      if (it == edge_ids.end()) {
        EdgeRec e;
        e.v1 = a;
        e.v2 = b;
        it = edge_ids.emplace(std::make_pair(a, b), (int)X.edges.size()).first;
        X.edges.push_back(e);
      }
      EdgeRec& e = X.edges[it->second];
      if (e.ntri < 2) e.tri[e.ntri] = (int)t;
      e.ntri++;
    }
  }
  // map-based ids are already deterministic (sorted by vertex pair)
  for (auto& [key, id] : edge_ids) (void)key, (void)id;

  for (size_t e = 0; e < X.edges.size(); ++e) {
    EdgeRec& er = X.edges[e];
    bool on_boundary = shares_zero_axis(X.vertices[er.v1].p, X.vertices[er.v2].p);
    if (on_boundary && er.ntri != 1)
      throw invariant_error("boundary edge with " + std::to_string(er.ntri) + " triangles");
    if (!on_boundary && er.ntri != 2)
      throw invariant_error("interior edge with " + std::to_string(er.ntri) + " triangles");
    er.compact = !on_boundary;
    X.vertices[er.v1].edges.push_back((int)e);
    X.vertices[er.v2].edges.push_back((int)e);
  }
  for (size_t t = 0; t < X.tris.size(); ++t)
    for (int v : X.tris[t].v) X.vertices[v].tris.push_back((int)t);

  if ((Int)X.tris.size() != r) throw invariant_error("triangle count differs from group order");

  for (size_t e = 0; e < X.edges.size(); ++e)
    X.edges[e].type = X.edges[e].compact ? classify(X, (int)e) : CurveType::NonCompact;

  // regular triangles: glue basic triangles across (-1,-1) edges
  DSU dsu((int)X.tris.size());
  for (const auto& er : X.edges)
    if (er.type == CurveType::MinusOneMinusOne) dsu.unite(er.tri[0], er.tri[1]);
  std::map<int, int> comp_ids;
  for (size_t t = 0; t < X.tris.size(); ++t) {
    int root = dsu.find((int)t);
    auto it = comp_ids.find(root);
    if (it == comp_ids.end()) {
      it = comp_ids.emplace(root, (int)X.regulars.size()).first;
      X.regulars.push_back(RegularTriangle{});
    }
    X.tris[t].regular = it->second;
    X.regulars[it->second].tris.push_back((int)t);
  }
  for (size_t e = 0; e < X.edges.size(); ++e)
    if (X.edges[e].type == CurveType::MinusOneMinusOne)
      X.edges[e].regular = X.tris[X.edges[e].tri[0]].regular;

  // verify each component against the standard subdivision of a lattice
  // triangle and classify it
  for (auto& reg : X.regulars) {
    std::map<int, int> tri_count;  // vertex -> incident member triangles
    for (int t : reg.tris)
      for (int v : X.tris[t].v) tri_count[v]++;
    std::vector<int> corners;
    for (const auto& [v, c] : tri_count)
      if (c == 1) corners.push_back(v);
    Int side = 1;
    while (side * side < (Int)reg.tris.size()) ++side;
    if (side * side != (Int)reg.tris.size())
      throw invariant_error("regular-triangle component is not a square count of triangles");
    reg.side = side;
    if (corners.size() != 3)
      throw invariant_error("regular-triangle component has " +
                            std::to_string(corners.size()) + " corners");
    std::sort(corners.begin(), corners.end());
    reg.corners = {corners[0], corners[1], corners[2]};

    const auto& A = X.vertices[corners[0]].p.num;
    const auto& B = X.vertices[corners[1]].p.num;
    const auto& C = X.vertices[corners[2]].p.num;
    std::array<Int, 3> u, w;
    for (int i = 0; i < 3; ++i) {
      if ((B[i] - A[i]) % side != 0 || (C[i] - A[i]) % side != 0)
        throw invariant_error("regular-triangle sides are not divisible by the side length");
      u[i] = (B[i] - A[i]) / side;
      w[i] = (C[i] - A[i]) / side;
    }
    if (!X.group.lattice_contains(u) || !X.group.lattice_contains(w))
      throw invariant_error("regular-triangle steps are not lattice vectors");

    // expected basic triangles of the standard subdivision
    auto vertex_at = [&](Int i, Int j) {
      std::array<Int, 3> p{A[0] + i * u[0] + j * w[0], A[1] + i * u[1] + j * w[1],
                           A[2] + i * u[2] + j * w[2]};
      LatticePoint lp{p, X.group.order(), 0};
      auto it = std::lower_bound(fan.junior.begin(), fan.junior.end(), lp);
      if (it == fan.junior.end() || !(it->num == p))
        throw invariant_error("regular-triangle grid point is not a vertex");
      return (int)(it - fan.junior.begin());
    };
    std::set<std::array<int, 3>> expect, got;
    for (Int i = 0; i + 1 <= side; ++i)
      for (Int j = 0; i + j + 1 <= side; ++j) {
        std::array<int, 3> up{vertex_at(i, j), vertex_at(i + 1, j), vertex_at(i, j + 1)};
        std::sort(up.begin(), up.end());
        expect.insert(up);
        if (i + j + 2 <= side) {
          std::array<int, 3> dn{vertex_at(i + 1, j), vertex_at(i, j + 1), vertex_at(i + 1, j + 1)};
          std::sort(dn.begin(), dn.end());
          expect.insert(dn);
        }
      }
    for (int t : reg.tris) got.insert({X.tris[t].v[0], X.tris[t].v[1], X.tris[t].v[2]});
    if (expect != got)
      throw invariant_error("component does not match the standard subdivision of a lattice triangle");

    for (int cv : {corners[0], corners[1], corners[2]}) {
      const auto& n = X.vertices[cv].p.num;
      for (int axis = 0; axis < 3; ++axis)
        if (n[axis] == X.group.order()) reg.corner_axes.push_back(axis);
    }
    reg.meeting_of_champions = reg.corner_axes.empty();
  }

  int moc_count = 0;
  for (const auto& reg : X.regulars)
    if (reg.meeting_of_champions) ++moc_count;

  // vertex kinds
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    VertexRec& vr = X.vertices[v];
    std::sort(vr.edges.begin(), vr.edges.end());
    std::sort(vr.tris.begin(), vr.tris.end());
    if (vr.boundary) {
      vr.kind = VertexKind::Boundary;
      continue;
    }
    size_t valency = vr.edges.size();
    bool all_interior = true;
    for (int e : vr.edges)
      if (X.edges[e].type != CurveType::MinusOneMinusOne) all_interior = false;
    if (valency == 3) {
      vr.kind = VertexKind::Trivalent;
      if (X.trivalent_vertex) throw invariant_error("more than one trivalent interior vertex");
      X.trivalent_vertex = (int)v;
      ++moc_count;
    } else if (valency == 6 && all_interior) {
      vr.kind = VertexKind::DelPezzo6;
    } else {
      vr.kind = VertexKind::Hirzebruch;
    }
  }
  if (moc_count > 1) throw invariant_error("more than one meeting of champions");

  // positional agreement: a compact edge is inside a regular triangle iff
  // it is a (-1,-1)-curve, and (1,-3)-curves not at a corner of the junior
  // simplex meet the trivalent vertex
  for (size_t e = 0; e < X.edges.size(); ++e) {
    const EdgeRec& er = X.edges[e];
    if (!er.compact) continue;
    bool interior_edge = X.tris[er.tri[0]].regular == X.tris[er.tri[1]].regular;
    if (interior_edge != (er.type == CurveType::MinusOneMinusOne))
      throw invariant_error("curve type disagrees with the regular-triangle position of edge " +
                            std::to_string(e));
    if (er.type == CurveType::OneMinusThree) {
      bool at_trivalent = X.trivalent_vertex &&
                          (er.v1 == *X.trivalent_vertex || er.v2 == *X.trivalent_vertex);
      bool at_corner = false;
      for (int v : {er.v1, er.v2}) {
        const auto& n = X.vertices[v].p.num;
        if (n[0] == X.group.order() || n[1] == X.group.order() || n[2] == X.group.order())
          at_corner = true;
      }
      if (!at_trivalent && !at_corner)
        throw invariant_error("(1,-3)-curve away from trivalent vertex and simplex corners");
    }
  }

  // del Pezzo vertices sit in the interior of their regular triangle
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    if (X.vertices[v].kind != VertexKind::DelPezzo6) continue;
    std::set<int> regs;
    for (int t : X.vertices[v].tris) regs.insert(X.tris[t].regular);
    if (regs.size() != 1)
      throw invariant_error("del Pezzo vertex not interior to a regular triangle");
  }

  return X;
}

}  // namespace ghilb
