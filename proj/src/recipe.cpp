#include "ghilb/recipe.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ghilb {

namespace {

// incident edge characters grouped by multiplicity, compact edges only
std::map<Int, int> mark_multiplicities(const Complex& X, const Marking& M, int v) {
  std::map<Int, int> mult;
  for (int e : X.vertices[v].edges)
    if (X.edges[e].compact) mult[M.edge_char[e]]++;
  return mult;
}

void cross_check_vertex(const Complex& X, const Marking& M, int v) {
  const auto& marks = M.vertex_marks[v];
  auto mult = mark_multiplicities(X, M, v);
  std::vector<Int> pairs, singles;
  for (const auto& [chi, k] : mult) {
    if (k == 2)
      pairs.push_back(chi);
    else if (k == 1)
      singles.push_back(chi);
    else if (k == 3 && X.vertices[v].kind == VertexKind::Trivalent)
      pairs.push_back(chi);
    else
      throw invariant_error("unexpected mark multiplicity at an interior vertex");
  }
  const GroupData& G = X.group;
  switch (X.vertices[v].kind) {
    case VertexKind::Trivalent: {
      if (pairs.size() != 1 || !singles.empty() || marks.size() != 1)
        throw invariant_error("trivalent vertex does not carry a single tripled character");
      if (marks[0] != G.chi_add(pairs[0], pairs[0]))
        throw invariant_error("trivalent vertex mark differs from the squared curve character");
      break;
    }
    case VertexKind::Hirzebruch: {
      if (pairs.size() != 2 || marks.size() != 1)
        throw invariant_error("Hirzebruch vertex does not carry two curve pairs");
      if (marks[0] != G.chi_add(pairs[0], pairs[1]))
        throw invariant_error("Hirzebruch vertex mark differs from the pair product");
      break;
    }
    case VertexKind::DelPezzo6: {
      if (pairs.size() != 3 || !singles.empty() || marks.size() != 2)
        throw invariant_error("del Pezzo vertex does not carry three curve pairs");
      Int lhs = G.chi_add(G.chi_add(pairs[0], pairs[1]), pairs[2]);
      if (lhs != G.chi_add(marks[0], marks[1]))
        throw invariant_error("del Pezzo vertex marks do not multiply to the pair product");
      break;
    }
    default:
      break;
  }
}

}  // namespace

Marking mark_all(const Complex& X) {
  const GroupData& G = X.group;
  Marking M;
  M.edge_char.assign(X.edges.size(), -1);
  M.edge_ratio.assign(X.edges.size(), {});
  M.vertex_marks.assign(X.vertices.size(), {});
  M.chain_edges.assign(G.order(), {});

  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (!X.edges[e].compact) continue;
    Monomial m1, m2;
    edge_ratio(G, X.vertices[X.edges[e].v1].p, X.vertices[X.edges[e].v2].p, m1, m2);
    Int chi = G.character_of(m1);
    if (G.is_trivial(chi)) throw invariant_error("compact edge marked with the trivial character");
    M.edge_ratio[e] = {m1, m2};
    M.edge_char[e] = chi;
    M.chain_edges[chi].push_back((int)e);
  }

  for (size_t v = 0; v < X.vertices.size(); ++v) {
    if (X.vertices[v].boundary) continue;
    std::set<Int> common;
    bool first = true;
    for (int t : X.vertices[v].tris) {
      auto soc = socle(G, X.fan.graphs[X.tris[t].graph]);
      std::set<Int> s(soc.begin(), soc.end());
      if (first) {
        common = s;
        first = false;
      } else {
        std::set<Int> inter;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                              std::inserter(inter, inter.begin()));
        common = inter;
      }
    }
    M.vertex_marks[v].assign(common.begin(), common.end());
    for (Int chi : M.vertex_marks[v])
      if (G.is_trivial(chi)) throw invariant_error("interior vertex marked trivially");
    size_t expect = X.vertices[v].kind == VertexKind::DelPezzo6 ? 2 : 1;
    if (M.vertex_marks[v].size() != expect)
      throw invariant_error("vertex " + to_string(X.vertices[v].p) + " carries " +
                            std::to_string(M.vertex_marks[v].size()) + " socle characters, expected " +
                            std::to_string(expect));
    cross_check_vertex(X, M, (int)v);
  }
  return M;
}

Chain chain_of(const Complex& X, const Marking& M, Int chi) {
  Chain c;
  c.chi = chi;
  c.edges = M.chain_edges[chi];
  if (c.edges.empty()) throw invariant_error("character marks no edge");
  std::set<int> verts;
  for (int e : c.edges) {
    verts.insert(X.edges[e].v1);
    verts.insert(X.edges[e].v2);
  }
  c.vertices.assign(verts.begin(), verts.end());
  // connected and acyclic
  if (c.edges.size() + 1 != c.vertices.size())
    throw invariant_error("chain is not a tree (edge/vertex count)");
  std::map<int, std::vector<int>> adj;
  for (int e : c.edges) {
    adj[X.edges[e].v1].push_back(X.edges[e].v2);
    adj[X.edges[e].v2].push_back(X.edges[e].v1);
  }
  std::set<int> seen{c.vertices[0]};
  std::vector<int> stack{c.vertices[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != c.vertices.size()) throw invariant_error("chain is disconnected");
  return c;
}

std::vector<int> chain_interior_vertices(const Complex& X, const Marking& M, Int chi) {
  std::map<int, int> deg;
  for (int e : M.chain_edges[chi]) {
    deg[X.edges[e].v1]++;
    deg[X.edges[e].v2]++;
  }
  std::vector<int> out;
  for (const auto& [v, d] : deg)
    if (d >= 2) out.push_back(v);
  return out;
}

Int chi_dp(const Complex& X, const Marking& M, int e, int d) {
  const GroupData& G = X.group;
  if (X.vertices[d].kind != VertexKind::DelPezzo6)
    throw std::invalid_argument("chi_dp needs a del Pezzo vertex");
  Int chi = M.edge_char[e];
  auto [t0, t1] = X.edge_tris(e);
  Int pick = -1;
  for (int t : {t0, t1}) {
    const GGraph& g = X.fan.graphs[X.tris[t].graph];
    Int found = -1;
    for (Int phi : M.vertex_marks[d]) {
      if (g.basis[chi].divides(g.basis[phi])) {
        if (found >= 0)
          throw invariant_error("both del Pezzo characters divisible at " + to_string(X.vertices[d].p));
        found = phi;
      }
    }
    if (found < 0) throw invariant_error("no del Pezzo character divisible by the curve generator");
    if (pick >= 0 && pick != found)
      throw invariant_error("del Pezzo selection differs between the two charts of the curve");
    pick = found;
  }
  return pick;
}

void check_tautological_relations(const Complex& X, const Marking& M) {
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    if (X.vertices[v].boundary) continue;
    auto mult = mark_multiplicities(X, M, (int)v);
    std::vector<Int> pairs;
    for (const auto& [chi, k] : mult)
      if (k >= 2) pairs.push_back(chi);
    const auto& marks = M.vertex_marks[v];
    for (int t : X.vertices[v].tris) {
      const GGraph& g = X.fan.graphs[X.tris[t].graph];
      Monomial lhs, rhs;
      switch (X.vertices[v].kind) {
        case VertexKind::Trivalent:
          lhs = g.basis[pairs[0]] * g.basis[pairs[0]];
          rhs = g.basis[marks[0]];
          break;
        case VertexKind::Hirzebruch:
          lhs = g.basis[pairs[0]] * g.basis[pairs[1]];
          rhs = g.basis[marks[0]];
          break;
        case VertexKind::DelPezzo6:
          lhs = g.basis[pairs[0]] * g.basis[pairs[1]] * g.basis[pairs[2]];
          rhs = g.basis[marks[0]] * g.basis[marks[1]];
          break;
        default:
          continue;
      }
      if (lhs != rhs)
        throw invariant_error("tautological relation fails at vertex " +
                              to_string(X.vertices[v].p) + " on triangle " + std::to_string(t));
    }
  }
}

}  // namespace ghilb
