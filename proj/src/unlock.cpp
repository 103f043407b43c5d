#include "ghilb/unlock.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace ghilb {

namespace {

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool parallel(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return cross(a, b) == std::array<Int, 3>{0, 0, 0};
}

// Per-curve view of its chain: degrees, flow orientation away from the
// curve, and the branch at a trivalent vertex.
struct ChainContext {
  const Complex& X;
  const Marking& M;
  int base;  // the input edge
  Int chi;
  std::vector<int> edges;
  std::map<int, int> degree;         // chain degree per vertex
  std::map<int, int> upstream;       // chain edge -> endpoint closer to base
  std::optional<int> trivalent;      // trivalent vertex on the chain
  std::set<int> branch;              // edges reachable without crossing it

  ChainContext(const Complex& X_, const Marking& M_, int edge)
      : X(X_), M(M_), base(edge), chi(M_.edge_char[edge]) {
    edges = M.chain_edges[chi];
    for (int e : edges) {
      degree[X.edges[e].v1]++;
      degree[X.edges[e].v2]++;
    }
    for (const auto& [v, d] : degree)
      if (d >= 3) {
        if (trivalent) throw invariant_error("chain branches at two vertices");
        if (!X.trivalent_vertex || *X.trivalent_vertex != v)
          throw invariant_error("chain branches away from the trivalent vertex");
        trivalent = v;
      }
    // orient edges away from the base by breadth-first search
    std::map<int, std::vector<int>> at_vertex;
    for (int e : edges) {
      at_vertex[X.edges[e].v1].push_back(e);
      at_vertex[X.edges[e].v2].push_back(e);
    }
    std::queue<int> work;
    std::set<int> seen{base};
    work.push(base);
    branch.insert(base);
    while (!work.empty()) {
      int e = work.front();
      work.pop();
      for (int v : {X.edges[e].v1, X.edges[e].v2}) {
        for (int f : at_vertex[v]) {
          if (seen.count(f)) continue;
          seen.insert(f);
          upstream[f] = v;
          work.push(f);
          if (!(trivalent && v == *trivalent)) branch.insert(f);
        }
      }
    }
    if (seen.size() != edges.size()) throw invariant_error("chain is disconnected");
    // edges cut off by the trivalent vertex still need an orientation
    if (trivalent)
      for (int e : edges)
        if (!branch.count(e) && !upstream.count(e)) upstream[e] = *trivalent;
  }

  bool edge_in_branch(int e) const { return branch.count(e) > 0; }
  bool vertex_in_branch(int v) const {
    for (int e : edges)
      if (edge_in_branch(e) && (X.edges[e].v1 == v || X.edges[e].v2 == v)) return true;
    return false;
  }

  std::vector<int> chain_edges_at(int v) const {
    std::vector<int> out;
    for (int e : edges)
      if (X.edges[e].v1 == v || X.edges[e].v2 == v) out.push_back(e);
    return out;
  }

  // edges of the rho-chain meeting v either end there or bend
  bool broken_at(Int rho, int v) const {
    std::vector<int> at;
    for (int e : M.chain_edges[rho])
      if (X.edges[e].v1 == v || X.edges[e].v2 == v) at.push_back(e);
    if (at.empty()) throw internal_error("brokenness query for an absent chain");
    if (at.size() == 1) return true;
    if (at.size() == 2)
      return !parallel(X.direction_from(at[0], v), X.direction_from(at[1], v));
    return true;
  }
};

// corner of the junior simplex collinear with a boundary edge
int collinear_corner(const Complex& X, int edge) {
  int found = -1;
  for (int axis = 0; axis < 3; ++axis) {
    const auto c = X.group.corner(axis).num;
    const auto& a = X.vertices[X.edges[edge].v1].p.num;
    const auto& b = X.vertices[X.edges[edge].v2].p.num;
    std::array<Int, 3> da{a[0] - c[0], a[1] - c[1], a[2] - c[2]};
    std::array<Int, 3> db{b[0] - c[0], b[1] - c[1], b[2] - c[2]};
    if (parallel(da, db)) {
      if (found >= 0) throw invariant_error("boundary curve collinear with two corners");
      found = axis;
    }
  }
  if (found < 0)
    throw invariant_error("boundary curve not collinear with any corner of the junior simplex");
  return found;
}

struct BoundaryData {
  int corner_axis;
  int v1, v2;            // endpoints of the curve, v1 nearer the corner
  int run_end;           // last vertex of the straight run
  int v_c_prime;         // end of the bent run (== run_end when absent)
  std::vector<int> run_edges;
  std::vector<int> run_divisors;    // interior vertices from v2 outward, in run order
  std::vector<int> bent_divisors;   // strictly between run_end and v_c_prime
  std::vector<int> bent_edges;
};

BoundaryData boundary_data(const ChainContext& ctx, int edge) {
  const Complex& X = ctx.X;
  BoundaryData bd;
  bd.corner_axis = collinear_corner(X, edge);
  const auto corner = X.group.corner(bd.corner_axis).num;

  auto lambda = [&](int v) {
    const auto& n = X.vertices[v].p.num;
    return std::abs(n[0] - corner[0]) + std::abs(n[1] - corner[1]) + std::abs(n[2] - corner[2]);
  };
  auto on_line = [&](int v) {
    const auto& n = X.vertices[v].p.num;
    const auto& a = X.vertices[X.edges[edge].v1].p.num;
    std::array<Int, 3> dn{n[0] - corner[0], n[1] - corner[1], n[2] - corner[2]};
    std::array<Int, 3> da{a[0] - corner[0], a[1] - corner[1], a[2] - corner[2]};
    return parallel(dn, da);
  };

  // connected run of collinear chain edges through the input edge
  std::set<int> collinear;
  for (int e : ctx.edges)
    if (on_line(X.edges[e].v1) && on_line(X.edges[e].v2)) collinear.insert(e);
  std::set<int> run{edge};
  std::queue<int> work;
  work.push(edge);
  while (!work.empty()) {
    int e = work.front();
    work.pop();
    for (int f : collinear)
      if (!run.count(f) && (X.edges[f].v1 == X.edges[e].v1 || X.edges[f].v1 == X.edges[e].v2 ||
                            X.edges[f].v2 == X.edges[e].v1 || X.edges[f].v2 == X.edges[e].v2)) {
        run.insert(f);
        work.push(f);
      }
  }
  bd.run_edges.assign(run.begin(), run.end());

  bd.v1 = X.edges[edge].v1;
  bd.v2 = X.edges[edge].v2;
  if (lambda(bd.v1) > lambda(bd.v2)) std::swap(bd.v1, bd.v2);

  bd.run_end = bd.v2;
  std::set<int> run_vertices;
  for (int e : bd.run_edges) {
    run_vertices.insert(X.edges[e].v1);
    run_vertices.insert(X.edges[e].v2);
  }
  for (int v : run_vertices)
    if (lambda(v) > lambda(bd.run_end)) bd.run_end = v;
  std::vector<int> divs;
  for (int v : run_vertices)
    if (X.is_interior_vertex(v) && lambda(v) >= lambda(bd.v2)) divs.push_back(v);
  std::sort(divs.begin(), divs.end(), [&](int a, int b) { return lambda(a) < lambda(b); });
  bd.run_divisors = divs;

  // the bent continuation: a path of (-1,-1) chain edges starting at the
  // run end
  bd.v_c_prime = bd.run_end;
  if (X.is_interior_vertex(bd.run_end) &&
      !(ctx.trivalent && *ctx.trivalent == bd.run_end)) {
    std::vector<int> cont;
    for (int e : ctx.chain_edges_at(bd.run_end))
      if (!run.count(e)) cont.push_back(e);
    if (cont.size() > 1) throw invariant_error("chain branches at the end of a straight run");
    if (cont.size() == 1 && X.edges[cont[0]].type == CurveType::MinusOneMinusOne) {
      int prev = bd.run_end;
      int cur = cont[0];
      while (true) {
        bd.bent_edges.push_back(cur);
        int next_v = X.edges[cur].v1 == prev ? X.edges[cur].v2 : X.edges[cur].v1;
        if (ctx.trivalent && *ctx.trivalent == next_v) {
          bd.v_c_prime = next_v;
          break;
        }
        std::vector<int> nxt;
        for (int e : ctx.chain_edges_at(next_v))
          if (e != cur) nxt.push_back(e);
        if (nxt.empty() || X.edges[nxt[0]].type != CurveType::MinusOneMinusOne) {
          bd.v_c_prime = next_v;
          break;
        }
        if (nxt.size() > 1) throw invariant_error("chain branches inside a bent run");
        bd.bent_divisors.push_back(next_v);
        prev = next_v;
        cur = nxt[0];
      }
    }
  }
  return bd;
}

// downstream curves at divisor v by the flow rule: some chain edge at v
// inside the regular triangle of the candidate must point away from the
// input curve
std::vector<int> flow_curves_at(const ChainContext& ctx, int v) {
  const Complex& X = ctx.X;
  std::vector<int> out;
  auto chain_at = ctx.chain_edges_at(v);
  for (int e : X.vertices[v].edges) {
    if (X.edges[e].type != CurveType::MinusOneMinusOne) continue;
    if (ctx.M.edge_char[e] == ctx.chi) continue;
    int reg = X.edges[e].regular;
    for (int f : chain_at) {
      if (f == ctx.base) continue;
      if (X.edges[f].type != CurveType::MinusOneMinusOne) continue;
      if (X.edges[f].regular != reg) continue;
      auto it = ctx.upstream.find(f);
      if (it != ctx.upstream.end() && it->second == v) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

std::vector<int> broken_curves_at(const ChainContext& ctx, int v) {
  const Complex& X = ctx.X;
  std::vector<int> out;
  for (int e : X.vertices[v].edges) {
    if (X.edges[e].type != CurveType::MinusOneMinusOne) continue;
    if (ctx.M.edge_char[e] == ctx.chi) continue;
    if (ctx.broken_at(ctx.M.edge_char[e], v)) out.push_back(e);
  }
  return out;
}

}  // namespace

Downstream downstream(const Complex& X, const Marking& M, int edge) {
  if (!X.edges[edge].compact) throw std::invalid_argument("downstream of a non-compact curve");
  ChainContext ctx(X, M, edge);
  Downstream ds;
  std::set<int> divisors;
  auto add = [&](int v, const std::vector<int>& curves) {
    divisors.insert(v);
    auto& dst = ds.curves[v];
    for (int e : curves)
      if (std::find(dst.begin(), dst.end(), e) == dst.end()) dst.push_back(e);
    std::sort(dst.begin(), dst.end());
  };

  if (X.edges[edge].type == CurveType::MinusOneMinusOne) {
    for (int v : chain_interior_vertices(X, M, ctx.chi)) {
      if (!X.is_interior_vertex(v)) continue;
      if (X.vertices[v].kind == VertexKind::DelPezzo6) continue;
      if (ctx.trivalent && !ctx.vertex_in_branch(v)) continue;
      add(v, flow_curves_at(ctx, v));
    }
  } else {
    BoundaryData bd = boundary_data(ctx, edge);
    for (int v : bd.run_divisors)
      if (X.vertices[v].kind != VertexKind::DelPezzo6) add(v, broken_curves_at(ctx, v));
    for (int v : bd.bent_divisors) {
      if (X.vertices[v].kind == VertexKind::DelPezzo6) continue;
      std::vector<int> flow = flow_curves_at(ctx, v);
      std::vector<int> keep;
      for (int e : flow)
        if (ctx.broken_at(M.edge_char[e], v)) keep.push_back(e);
      add(v, keep);
    }
  }
  ds.divisors.assign(divisors.begin(), divisors.end());
  return ds;
}

ChainQuiver xi_quiver(const Complex& X, const Marking& M, int edge) {
  if (!X.edges[edge].compact) throw std::invalid_argument("quiver of a non-compact curve");
  ChainContext ctx(X, M, edge);
  ChainQuiver q;
  q.base_edge = edge;
  q.boundary_case = X.edges[edge].type != CurveType::MinusOneMinusOne;

  auto is_divisor_vertex = [&](int v) {
    return X.is_interior_vertex(v) && X.vertices[v].kind != VertexKind::DelPezzo6 &&
           ctx.degree.at(v) >= 2;
  };

  // walk one direction of the chain tree from start_vertex along first_edge,
  // splitting arrows at divisor vertices and stopping at stop_vertex
  auto walk = [&](int start_vertex, int first_edge, int tail, int stop_vertex,
                  std::vector<int> seed = {}) {
    QuiverArrow arrow;
    arrow.tail_vertex = tail;
    arrow.edges = std::move(seed);
    int prev = start_vertex;
    int cur = first_edge;
    while (true) {
      arrow.edges.push_back(cur);
      int v = X.edges[cur].v1 == prev ? X.edges[cur].v2 : X.edges[cur].v1;
      std::vector<int> nxt;
      for (int e : ctx.chain_edges_at(v))
        if (e != cur && ctx.edge_in_branch(e)) nxt.push_back(e);
      bool stop = (v == stop_vertex) || nxt.empty() || nxt.size() > 1;
      if (is_divisor_vertex(v)) {
        arrow.head_vertex = v;
        q.arrows.push_back(arrow);
        q.divisor_vertices.push_back(v);
        if (stop) break;
        arrow = QuiverArrow{};
        arrow.tail_vertex = v;
      } else if (stop) {
        arrow.head_vertex = v;
        q.arrows.push_back(arrow);
        break;
      }
      // a del Pezzo or boundary pass-through vertex keeps the arrow open
      prev = v;
      cur = nxt[0];
    }
  };

  if (!q.boundary_case) {
    for (int v : {X.edges[edge].v1, X.edges[edge].v2}) {
      std::vector<int> first;
      for (int e : ctx.chain_edges_at(v))
        if (e != edge && ctx.edge_in_branch(e)) first.push_back(e);
      if (is_divisor_vertex(v)) {
        QuiverArrow half;
        half.tail_vertex = -1;
        half.head_vertex = v;
        half.edges = {edge};
        q.arrows.push_back(half);
        q.divisor_vertices.push_back(v);
        for (int e : first) walk(v, e, v, -1);
      } else if (!first.empty()) {
        // the half of the input edge continues through a pass-through vertex
        walk(v, first[0], -1, -1, {edge});
      } else {
        q.arrows.push_back(QuiverArrow{-1, v, {edge}});
      }
    }
  } else {
    BoundaryData bd = boundary_data(ctx, edge);
    q.corner_axis = bd.corner_axis;
    q.v1 = bd.v1;
    q.v2 = bd.v2;
    q.v_c = bd.run_end;
    q.v_c_prime = bd.v_c_prime;
    q.run_edges = bd.run_edges;
    if (is_divisor_vertex(bd.v2)) q.divisor_vertices.push_back(bd.v2);
    for (int e : ctx.chain_edges_at(bd.v2))
      if (e != edge && ctx.edge_in_branch(e)) walk(bd.v2, e, bd.v2, bd.v_c_prime);
  }
  std::sort(q.divisor_vertices.begin(), q.divisor_vertices.end());
  q.divisor_vertices.erase(std::unique(q.divisor_vertices.begin(), q.divisor_vertices.end()),
                           q.divisor_vertices.end());
  return q;
}

bool GigsawPiece::has(Int chi) const {
  return std::binary_search(chars.begin(), chars.end(), chi);
}

Unlocker::Unlocker(const Complex& X, const Marking& M) : X_(X), M_(M) {
  memo_.resize(X.edges.size());
  in_progress_.assign(X.edges.size(), 0);
}

const GigsawPiece& Unlocker::unlock(int edge) {
  if (memo_[edge]) return *memo_[edge];
  if (!X_.edges[edge].compact) throw std::invalid_argument("unlocking a non-compact curve");
  if (in_progress_[edge])
    throw internal_error("unlocking recursion revisited edge " + std::to_string(edge));
  in_progress_[edge] = 1;

  const GroupData& G = X_.group;
  GigsawPiece piece;
  piece.edge = edge;
  Int chi = M_.edge_char[edge];
  std::set<Int> chars{chi};
  piece.trace.push_back({chi, PieceStep::Chain, -1});

  // divisors along the chain: one character each
  for (int v : chain_interior_vertices(X_, M_, chi)) {
    if (!X_.is_interior_vertex(v)) continue;
    if (X_.vertices[v].kind == VertexKind::DelPezzo6) {
      Int phi = chi_dp(X_, M_, edge, v);
      if (chars.insert(phi).second) piece.trace.push_back({phi, PieceStep::DelPezzo, v});
    } else {
      Int psi = M_.vertex_marks[v][0];
      if (chars.insert(psi).second) piece.trace.push_back({psi, PieceStep::Divisor, v});
    }
  }

  // unlocked curves feed their puzzles into this one
  Downstream ds = downstream(X_, M_, edge);
  for (const auto& [div, curves] : ds.curves) {
    for (int e : curves) {
      const GigsawPiece& sub = unlock(e);
      for (Int c : sub.chars)
        if (chars.insert(c).second) piece.trace.push_back({c, PieceStep::Recursion, e});
    }
  }

  if (chars.count(0)) throw invariant_error("total G-igsaw piece contains the trivial character");
  (void)G;
  piece.chars.assign(chars.begin(), chars.end());
  in_progress_[edge] = 0;
  memo_[edge] = std::move(piece);
  return *memo_[edge];
}

}  // namespace ghilb
