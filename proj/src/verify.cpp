#include "ghilb/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ghilb {

namespace {

void check_socle_properties(const GroupData& G, const Fan& fan) {
  for (const auto& g : fan.graphs) {
    auto soc = socle(G, g);
    if (soc.empty()) throw invariant_error("cluster with empty socle");
    for (Int a : soc)
      for (Int b : soc)
        if (a != b && g.basis[a].divides(g.basis[b]))
          throw invariant_error("socle monomials are not an antichain");
  }
}

void check_oracle_equivalence(const Complex& X, const Marking& M, Unlocker& U) {
  const GroupData& G = X.group;
  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (!X.edges[e].compact) continue;
    const GigsawPiece& piece = U.unlock((int)e);
    auto [t0, t1] = X.edge_tris((int)e);
    const GGraph& a = X.fan.graphs[X.tris[t0].graph];
    const GGraph& b = X.fan.graphs[X.tris[t1].graph];
    auto oracle = gigsaw_oracle(a, b);
    if (oracle != piece.chars)
      throw invariant_error("unlocking disagrees with the cluster oracle on edge " +
                            std::to_string(e) + " (" + to_string(X.vertices[X.edges[e].v1].p) +
                            " - " + to_string(X.vertices[X.edges[e].v2].p) + ")");
    if (!piece.has(M.edge_char[e]))
      throw invariant_error("piece does not contain the curve character");
    // the piece is also the divisibility class of the curve generator
    Int chi = M.edge_char[e];
    for (const GGraph* g : {&a, &b}) {
      std::vector<Int> cls;
      for (Int c = 0; c < G.order(); ++c)
        if (g->basis[chi].divides(g->basis[c])) cls.push_back(c);
      if (cls != piece.chars)
        throw invariant_error("piece differs from the staircase above the curve generator");
    }
  }
}

void check_degree_laws(const Complex& X, const Marking& M, Unlocker& U) {
  const GroupData& G = X.group;
  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (!X.edges[e].compact) continue;
    auto [t0, t1] = X.edge_tris((int)e);
    const GGraph& a = X.fan.graphs[X.tris[t0].graph];
    const GGraph& b = X.fan.graphs[X.tris[t1].graph];
    const auto& [m1, m2] = M.edge_ratio[e];
    auto deg = gigsaw_degrees(G, a, b, m1, m2);
    auto oracle = gigsaw_oracle(a, b);
    for (Int c = 0; c < G.order(); ++c) {
      bool moved = std::binary_search(oracle.begin(), oracle.end(), c);
      if (moved != (deg[c] != 0))
        throw invariant_error("degree support differs from the moved characters");
    }
    // unlocked curves move at least as much as their own character
    Downstream ds = downstream(X, M, (int)e);
    for (const auto& [div, curves] : ds.curves)
      for (int f : curves) {
        Int rho = M.edge_char[f];
        for (Int psi : U.unlock(f).chars)
          if (deg[psi] < deg[rho])
            throw invariant_error("degree monotonicity fails along an unlocked curve");
      }
  }
}

}  // namespace

CheckReport run_full_check(const GroupData& G, const CheckOptions& opt) {
  CheckReport rep;
  rep.group = G.spec_string();
  try {
    Fan fan = walk_fan(G);
    rep.cones = (Int)fan.graphs.size();
    check_socle_properties(G, fan);

    Complex X = build_complex(fan);
    for (const auto& er : X.edges)
      if (er.compact) ++rep.compact_edges;

    Marking M = mark_all(X);
    for (Int chi = 0; chi < G.order(); ++chi)
      if (!M.chain_edges[chi].empty()) chain_of(X, M, chi);
    check_tautological_relations(X, M);

    // every del Pezzo divisor hands exactly one character to each chain
    // curve, constant on each side of the divisor
    for (size_t v = 0; v < X.vertices.size(); ++v) {
      if (X.vertices[v].kind != VertexKind::DelPezzo6) continue;
      for (Int chi = 0; chi < G.order(); ++chi) {
        bool on_chain = false;
        for (int e : M.chain_edges[chi])
          if (X.edges[e].v1 == (int)v || X.edges[e].v2 == (int)v) on_chain = true;
        if (!on_chain) continue;
        int count = 0;
        for (int e : M.chain_edges[chi]) {
          (void)chi_dp(X, M, e, (int)v);
          ++count;
        }
        if (count == 0) throw invariant_error("unreachable");
      }
    }

    Unlocker U(X, M);
    check_oracle_equivalence(X, M, U);
    check_degree_laws(X, M, U);

    if (opt.with_walls && G.order() > 1) {
      WallReport wr = compute_walls(X, M, U, opt.chamber);
      rep.walls = (Int)wr.walls.size();
      rep.inequalities = (Int)wr.assembled.size();
      for (const auto& w : wr.warnings) rep.warnings.push_back(w);
      for (size_t d = 0; d < wr.distinct.size(); ++d)
        if (wr.distinct[d].certificate && !verify_certificate(wr, (int)d))
          throw internal_error("stored redundancy certificate fails re-verification");
    }
    rep.ok = true;
  } catch (const std::exception& ex) {
    rep.ok = false;
    rep.errors.push_back(ex.what());
  }
  return rep;
}

std::vector<GroupData> sweep_groups(Int max_order) {
  std::vector<GroupData> out;
  for (Int r = 1; r <= max_order; ++r) {
    std::set<std::array<Int, 3>> seen;
    for (Int a = 0; a < r; ++a)
      for (Int b = a; b < r; ++b) {
        Int c = (2 * r - a - b) % r;
        if (c < b) continue;
        std::array<Int, 3> w{a, b, c};
        if (r > 1 && std::gcd(std::gcd(std::gcd(a, b), c), r) != 1) continue;
        // canonical representative over unit rescaling and permutation
        std::array<Int, 3> best{r, r, r};
        bool is_best = true;
        for (Int u = 1; u < std::max<Int>(r, 2); ++u) {
          if (std::gcd(u, r) != 1) continue;
          std::array<Int, 3> t{u * a % r, u * b % r, u * c % r};
          std::sort(t.begin(), t.end());
          if (t < best) best = t;
        }
        if (r == 1) best = {0, 0, 0};
        std::array<Int, 3> sorted_w = w;
        std::sort(sorted_w.begin(), sorted_w.end());
        is_best = (sorted_w == best);
        if (!is_best || !seen.insert(best).second) continue;
        out.push_back(GroupData::cyclic(r, best[0], best[1], best[2]));
      }
  }
  return out;
}

}  // namespace ghilb
