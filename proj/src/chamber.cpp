#include "ghilb/chamber.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace ghilb {

std::string to_string(WallType t) {
  switch (t) {
    case WallType::I: return "I";
    case WallType::III: return "III";
    case WallType::Zero: return "0";
  }
  return "?";
}

namespace {

std::string spreadsheet_letter(int k) {
  std::string s;
  ++k;
  while (k > 0) {
    --k;
    s.insert(s.begin(), char('A' + k % 26));
    k /= 26;
  }
  return s;
}

std::string char_label(const GroupData& G, Int chi) {
  auto t = G.decode(chi);
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  return os.str();
}

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// chain edges in a fixed traversal order: from the smallest leaf vertex,
// following ascending edge ids
std::vector<int> chain_order(const Complex& X, const Marking& M, Int chi) {
  const auto& edges = M.chain_edges[chi];
  if (edges.empty()) return {};
  std::map<int, std::vector<int>> at;
  std::map<int, int> deg;
  for (int e : edges) {
    at[X.edges[e].v1].push_back(e);
    at[X.edges[e].v2].push_back(e);
    deg[X.edges[e].v1]++;
    deg[X.edges[e].v2]++;
  }
  int start = -1;
  for (const auto& [v, d] : deg)
    if (d == 1 && (start < 0 || v < start)) start = v;
  if (start < 0) start = X.edges[edges[0]].v1;
  std::vector<int> order;
  std::set<int> seen;
  // iterative DFS, smallest edge first
  std::vector<std::pair<int, int>> stack{{start, -1}};
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    stack.pop_back();
    if (via >= 0) order.push_back(via);
    auto nbrs = at[v];
    std::sort(nbrs.rbegin(), nbrs.rend());
    for (int e : nbrs) {
      if (seen.count(e)) continue;
      seen.insert(e);
      int w = X.edges[e].v1 == v ? X.edges[e].v2 : X.edges[e].v1;
      stack.push_back({w, e});
    }
  }
  return order;
}

std::vector<Int> normalize(std::vector<Int> v) {
  Int g = 0;
  for (Int c : v) g = std::gcd(g, std::abs(c));
  if (g > 1)
    for (Int& c : v) c /= g;
  return v;
}

std::vector<int> support(const std::vector<Int>& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back((int)i);
  return s;
}

bool support_subset(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] == 0) return false;
  return true;
}

bool leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// bounded search for an integral conic decomposition of target into cands
bool integer_cover(const std::vector<Int>& target, const std::vector<std::vector<Int>*>& cands,
                   const std::vector<int>& cand_ids, std::map<int, Int>& out, long long& budget) {
  int pos = -1;
  for (size_t i = 0; i < target.size(); ++i)
    if (target[i] > 0) {
      pos = (int)i;
      break;
    }
  if (pos < 0) return true;
  if (--budget < 0) return false;
  for (size_t c = 0; c < cands.size(); ++c) {
    const auto& v = *cands[c];
    if (v[pos] == 0 || !leq(v, target)) continue;
    std::vector<Int> rest(target.size());
    for (size_t i = 0; i < target.size(); ++i) rest[i] = target[i] - v[i];
    out[cand_ids[c]]++;
    if (integer_cover(rest, cands, cand_ids, out, budget)) return true;
    if (--out[cand_ids[c]] == 0) out.erase(cand_ids[c]);
  }
  return false;
}

}  // namespace

const DistinctIneq& WallReport::of(const Inequality& i) const {
  int idx = distinct_index(i.coeff);
  if (idx < 0) throw internal_error("inequality missing from the distinct table");
  return distinct[idx];
}

int WallReport::distinct_index(const std::vector<Int>& coeff) const {
  auto key = normalize(coeff);
  for (size_t i = 0; i < distinct.size(); ++i)
    if (distinct[i].coeff == key) return (int)i;
  return -1;
}

Inequality curve_inequality(const Complex& X, const Marking& M, Unlocker& U, int edge) {
  if (!X.edges[edge].compact) throw std::invalid_argument("inequality of a non-compact curve");
  const GroupData& G = X.group;
  auto [t0, t1] = X.edge_tris(edge);
  const GGraph& a = X.fan.graphs[X.tris[t0].graph];
  const GGraph& b = X.fan.graphs[X.tris[t1].graph];
  const auto& [m1, m2] = M.edge_ratio[edge];
  std::vector<Int> deg = gigsaw_degrees(G, a, b, m1, m2);

  const GigsawPiece& piece = U.unlock(edge);
  std::vector<Int> oracle = gigsaw_oracle(a, b);
  if (oracle != piece.chars)
    throw internal_error("unlocking procedure disagrees with the cluster oracle on edge " +
                         std::to_string(edge));

  Inequality q;
  q.coeff = deg;
  q.source.kind = IneqSource::Curve;
  q.source.edge = edge;

  Int chi = M.edge_char[edge];
  if (X.edges[edge].type == CurveType::MinusOneMinusOne) {
    for (Int c : q.coeff)
      if (c != 0 && c != 1)
        throw invariant_error("(-1,-1)-curve inequality with a coefficient above one");
  }
  if (X.edges[edge].type == CurveType::OneMinusThree && X.trivalent_vertex &&
      (X.edges[edge].v1 == *X.trivalent_vertex || X.edges[edge].v2 == *X.trivalent_vertex)) {
    Int chi2 = G.chi_add(chi, chi);
    for (Int c = 0; c < G.order(); ++c) {
      Int expect = q.coeff[c] == 0 ? 0 : (c == chi2 ? 2 : 1);
      if (q.coeff[c] != expect)
        throw invariant_error("(1,-3)-curve at the trivalent vertex has unexpected multiplicities");
    }
  }
  return q;
}

std::vector<Inequality> subsheaf_inequalities(const Complex& X, const Marking& M) {
  std::vector<Inequality> out;
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    for (Int psi : M.vertex_marks[v]) {
      Inequality q;
      q.coeff.assign(X.group.order(), 0);
      q.coeff[psi] = 1;
      q.source.kind = IneqSource::Subsheaf;
      q.source.vertex = (int)v;
      q.source.chi = psi;
      out.push_back(q);
    }
  }
  return out;
}

Inequality quotient_inequality(const Complex& X, const Marking& M, Unlocker& U,
                               const std::vector<int>& divisor) {
  if (divisor.empty()) throw std::invalid_argument("empty divisor set");
  // connectivity in the divisor-adjacency graph
  std::set<int> dset(divisor.begin(), divisor.end());
  for (int v : dset)
    if (!X.is_interior_vertex(v)) throw std::invalid_argument("divisor set contains a boundary vertex");
  std::set<int> seen{*dset.begin()};
  std::queue<int> work;
  work.push(*dset.begin());
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (int e : X.vertices[v].edges) {
      int w = X.edges[e].v1 == v ? X.edges[e].v2 : X.edges[e].v1;
      if (dset.count(w) && !seen.count(w)) {
        seen.insert(w);
        work.push(w);
      }
    }
  }
  if (seen.size() != dset.size()) throw std::invalid_argument("divisor set is disconnected");

  Inequality q;
  q.coeff.assign(X.group.order(), 0);
  for (int v : dset)
    for (int e : X.vertices[v].edges)
      for (Int chi : U.unlock(e).chars) q.coeff[chi] = 1;
  q.source.kind = IneqSource::Quotient;
  q.source.divisor.assign(dset.begin(), dset.end());
  return q;
}

std::vector<GeneralisedLongSide> generalised_long_sides(const Complex& X, const Marking& M) {
  std::vector<GeneralisedLongSide> out;
  for (Int chi = 0; chi < X.group.order(); ++chi) {
    const auto& edges = M.chain_edges[chi];
    if (edges.empty()) continue;
    bool has_flop = false;
    for (int e : edges)
      if (X.edges[e].type == CurveType::MinusOneMinusOne) has_flop = true;
    if (has_flop) continue;
    // exclude the champions of a side-zero meeting of champions
    std::map<int, int> deg;
    for (int e : edges) {
      deg[X.edges[e].v1]++;
      deg[X.edges[e].v2]++;
    }
    bool branches = false;
    std::vector<int> leaves;
    for (const auto& [v, d] : deg) {
      if (d > 2) branches = true;
      if (d == 1) leaves.push_back(v);
    }
    if (branches) continue;
    if (leaves.size() != 2) throw invariant_error("flop-free chain is not a path");
    if (!X.vertices[leaves[0]].boundary || !X.vertices[leaves[1]].boundary) continue;

    GeneralisedLongSide gls;
    gls.chi = chi;
    gls.edges = edges;

    // walk the path from the smaller leaf and split into straight segments
    std::map<int, std::vector<int>> at;
    for (int e : edges) {
      at[X.edges[e].v1].push_back(e);
      at[X.edges[e].v2].push_back(e);
    }
    int start = std::min(leaves[0], leaves[1]);
    std::vector<int> path;
    {
      int v = start, prev_edge = -1;
      while (true) {
        int next = -1;
        for (int e : at[v])
          if (e != prev_edge) next = e;
        if (next < 0) break;
        path.push_back(next);
        v = X.edges[next].v1 == v ? X.edges[next].v2 : X.edges[next].v1;
        prev_edge = next;
      }
    }
    std::vector<std::vector<int>> segments;
    {
      int v = start;
      for (int e : path) {
        auto dir = X.direction_from(e, v);
        if (segments.empty() ||
            cross(dir, X.direction_from(segments.back().back(),
                                        v)) != std::array<Int, 3>{0, 0, 0})
          segments.push_back({});
        segments.back().push_back(e);
        v = X.edges[e].v1 == v ? X.edges[e].v2 : X.edges[e].v1;
      }
    }
    if (segments.size() == 1) {
      // a plain long side starts at a corner; its final curve is the far end
      const auto order = X.group.order();
      auto is_corner = [&](int v) {
        const auto& n = X.vertices[v].p.num;
        return n[0] == order || n[1] == order || n[2] == order;
      };
      int other = (start == leaves[0]) ? leaves[1] : leaves[0];
      if (is_corner(start))
        gls.final_edges = {segments[0].back()};
      else if (is_corner(other))
        gls.final_edges = {segments[0].front()};
      else
        throw invariant_error("straight long side without a corner endpoint");
    } else {
      gls.final_edges = {segments.front().back(), segments.back().front()};
      std::sort(gls.final_edges.begin(), gls.final_edges.end());
    }

    gls.wall_coeff.assign(X.group.order(), 0);
    gls.wall_coeff[chi] = 1;
    for (int v : chain_interior_vertices(X, M, chi)) {
      if (!X.is_interior_vertex(v)) continue;
      if (X.vertices[v].kind == VertexKind::DelPezzo6)
        throw invariant_error("del Pezzo divisor on a generalised long side");
      gls.wall_coeff[M.vertex_marks[v][0]] = 1;
    }
    out.push_back(std::move(gls));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> connected_divisor_subsets(const Complex& X, int cap,
                                                        std::vector<std::string>& warnings) {
  std::vector<int> interior;
  for (size_t v = 0; v < X.vertices.size(); ++v)
    if (X.is_interior_vertex((int)v)) interior.push_back((int)v);
  int n = (int)interior.size();
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  if (cap == 0 && n > 20) {
    cap = 8;
    warnings.push_back("more than 20 interior vertices: quotient divisors capped at size 8");
  }
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (X.edge_index(interior[i], interior[j]) >= 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  if (n <= 20) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (cap > 0 && size > cap) continue;
      int first = __builtin_ctz(mask);
      unsigned seen = 1u << first;
      std::vector<int> work{first};
      while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        for (int w : adj[v])
          if ((mask >> w & 1) && !(seen >> w & 1)) {
            seen |= 1u << w;
            work.push_back(w);
          }
      }
      if (seen != mask) continue;
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(interior[i]);
      out.push_back(subset);
    }
  } else {
    // breadth-first growth with global deduplication; only reached with a
    // size cap in place
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> work;
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{v};
      seen.insert(s);
      work.push(s);
    }
    while (!work.empty()) {
      auto s = work.front();
      work.pop();
      std::vector<int> subset;
      for (int i : s) subset.push_back(interior[i]);
      out.push_back(subset);
      if ((int)s.size() >= cap) continue;
      for (int v : s)
        for (int w : adj[v]) {
          if (std::binary_search(s.begin(), s.end(), w)) continue;
          auto s2 = s;
          s2.insert(std::lower_bound(s2.begin(), s2.end(), w), w);
          if (seen.insert(s2).second) work.push(s2);
        }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

WallReport compute_walls(const Complex& X, const Marking& M, Unlocker& U,
                         const ChamberOptions& opt) {
  const GroupData& G = X.group;
  const Int r = G.order();
  WallReport rep;
  rep.group = G;

  struct Raw {
    Inequality ineq;
    bool listed;
  };
  std::vector<Raw> raw;

  // curve inequalities, then the subsheaf inequality and the one-vertex
  // quotient of each character, grouped by character
  std::map<Int, int> bucket_count;
  auto next_label = [&](Int chi) {
    int k = bucket_count[chi]++;
    return spreadsheet_letter(k) + "_" + char_label(G, chi);
  };

  std::map<int, Int> vertex_bucket;  // single-vertex quotient goes under min mark
  for (size_t v = 0; v < X.vertices.size(); ++v)
    if (!M.vertex_marks[v].empty()) vertex_bucket[(int)v] = M.vertex_marks[v][0];

  for (Int chi = 0; chi < r; ++chi) {
    for (int e : chain_order(X, M, chi)) {
      Raw rw{curve_inequality(X, M, U, e), true};
      rw.ineq.label = next_label(chi);
      raw.push_back(std::move(rw));
    }
    for (size_t v = 0; v < X.vertices.size(); ++v) {
      for (Int psi : M.vertex_marks[v]) {
        if (psi != chi) continue;
        Inequality q;
        q.coeff.assign(r, 0);
        q.coeff[psi] = 1;
        q.source.kind = IneqSource::Subsheaf;
        q.source.vertex = (int)v;
        q.source.chi = psi;
        q.label = next_label(chi);
        raw.push_back({std::move(q), true});
      }
    }
    for (const auto& [v, bucket] : vertex_bucket) {
      if (bucket != chi) continue;
      Inequality q = quotient_inequality(X, M, U, {v});
      q.label = next_label(chi);
      raw.push_back({std::move(q), true});
    }
  }

  // all larger connected divisor sets
  auto subsets = connected_divisor_subsets(X, opt.max_quotient_size, rep.warnings);
  rep.quotient_count = (Int)subsets.size();
  int qlabel = 0;
  for (const auto& subset : subsets) {
    if (subset.size() == 1) continue;  // already listed
    Inequality q = quotient_inequality(X, M, U, subset);
    q.label = "Q" + std::to_string(++qlabel);
    raw.push_back({std::move(q), false});
  }

  // dedupe by normalized coefficient vector
  std::map<std::vector<Int>, int> index;
  std::vector<std::vector<int>> raw_members;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto key = normalize(raw[i].ineq.coeff);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, (int)rep.distinct.size()).first;
      DistinctIneq d;
      d.coeff = key;
      rep.distinct.push_back(std::move(d));
      raw_members.push_back({});
    }
    raw_members[it->second].push_back((int)i);
  }
  const int m = (int)rep.distinct.size();

  // redundancy by conic decomposition (integral search, then exact rational
  // fallback) and independently by the facet test
  for (int i = 0; i < m; ++i) {
    DistinctIneq& d = rep.distinct[i];
    std::vector<int> cand_ids;
    for (int j = 0; j < m; ++j)
      if (j != i && support_subset(rep.distinct[j].coeff, d.coeff)) cand_ids.push_back(j);

    // engine one: conic decomposition
    std::optional<Certificate> cert;
    {
      std::vector<std::vector<Int>*> cands;
      std::vector<int> ids;
      for (int j : cand_ids)
        if (leq(rep.distinct[j].coeff, d.coeff)) {
          cands.push_back(&rep.distinct[j].coeff);
          ids.push_back(j);
        }
      // larger supports first tends to find the short certificates
      std::vector<size_t> ord(cands.size());
      std::iota(ord.begin(), ord.end(), 0u);
      std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) {
        return support(*cands[a]).size() > support(*cands[b]).size();
      });
      std::vector<std::vector<Int>*> cs;
      std::vector<int> cids;
      for (size_t k : ord) {
        cs.push_back(cands[k]);
        cids.push_back(ids[k]);
      }
      std::map<int, Int> parts;
      long long budget = 200000;
      if (integer_cover(d.coeff, cs, cids, parts, budget)) {
        Certificate c;
        c.integral = true;
        for (const auto& [j, mult] : parts) c.parts.push_back({Rat(mult), j});
        cert = c;
      } else {
        // exact rational decomposition over the support-compatible vectors
        auto sup = support(d.coeff);
        std::vector<std::vector<Rat>> gens;
        for (int j : cand_ids) {
          std::vector<Rat> g(sup.size());
          for (size_t k = 0; k < sup.size(); ++k) g[k] = rep.distinct[j].coeff[sup[k]];
          gens.push_back(std::move(g));
        }
        std::vector<Rat> target(sup.size());
        for (size_t k = 0; k < sup.size(); ++k) target[k] = d.coeff[sup[k]];
        auto lam = conic_combination(gens, target);
        if (lam) {
          Certificate c;
          c.integral = true;
          for (size_t k = 0; k < lam->size(); ++k)
            if ((*lam)[k] != 0) {
              c.parts.push_back({(*lam)[k], cand_ids[k]});
              if (boost::multiprecision::denominator((*lam)[k]) != 1) c.integral = false;
            }
          cert = c;
        }
      }
    }

    // engine two: facet test on the support coordinates
    bool facet = false;
    std::vector<Rat> witness;
    {
      auto sup = support(d.coeff);
      std::vector<LinearConstraint> cons;
      LinearConstraint eq;
      eq.a.assign(sup.size(), 0);
      for (size_t k = 0; k < sup.size(); ++k) eq.a[k] = d.coeff[sup[k]];
      eq.b = 0;
      eq.equality = true;
      cons.push_back(eq);
      for (int j : cand_ids) {
        LinearConstraint ge;
        ge.a.assign(sup.size(), 0);
        for (size_t k = 0; k < sup.size(); ++k) ge.a[k] = rep.distinct[j].coeff[sup[k]];
        ge.b = 1;
        cons.push_back(ge);
      }
      auto theta = solve_feasibility((int)sup.size(), cons);
      if (theta) {
        facet = true;
        // extend off the support by a large constant so every other
        // inequality is strictly positive
        Rat low = 0;
        for (int j = 0; j < m; ++j) {
          if (j == i) continue;
          Rat dot = 0;
          for (size_t k = 0; k < sup.size(); ++k) dot += Rat(rep.distinct[j].coeff[sup[k]]) * (*theta)[k];
          if (dot < low) low = dot;
        }
        Rat big = 1 - low;
        witness.assign(r, big);
        witness[0] = 0;
        for (size_t k = 0; k < sup.size(); ++k) witness[sup[k]] = (*theta)[k];
        // exact re-verification of the witness
        for (int j = 0; j < m; ++j) {
          Rat dot = 0;
          for (Int c = 0; c < r; ++c) dot += Rat(rep.distinct[j].coeff[c]) * witness[c];
          if (j == i ? dot != 0 : dot <= 0)
            throw internal_error("facet witness failed exact verification");
        }
      }
    }

    if (cert.has_value() == facet)
      throw internal_error("summand and facet engines disagree on an inequality");
    d.wall = facet;
    d.certificate = cert;
    d.facet_witness = witness;
  }

  // listing: raw entries that are listed, plus one representative for every
  // multi-vertex quotient that turned out to be a wall
  std::vector<int> raw_to_assembled(raw.size(), -1);
  for (size_t i = 0; i < raw.size(); ++i) {
    int di = index[normalize(raw[i].ineq.coeff)];
    bool keep = raw[i].listed;
    if (!keep && rep.distinct[di].wall) {
      keep = true;
      for (int other : raw_members[di])
        if (other < (int)i && raw_to_assembled[other] >= 0) keep = false;
    }
    if (!keep) continue;
    raw_to_assembled[i] = (int)rep.assembled.size();
    rep.assembled.push_back(raw[i].ineq);
  }
  for (int di = 0; di < m; ++di)
    for (int ri : raw_members[di])
      if (raw_to_assembled[ri] >= 0) rep.distinct[di].members.push_back(raw_to_assembled[ri]);

  // classification
  rep.long_sides = generalised_long_sides(X, M);
  std::set<int> final_edges;
  for (const auto& gls : rep.long_sides)
    for (int e : gls.final_edges) final_edges.insert(e);

  int n_flops = 0;
  for (const auto& er : X.edges)
    if (er.type == CurveType::MinusOneMinusOne) ++n_flops;
  rep.n_minus11 = n_flops;
  rep.n_gls = (int)rep.long_sides.size();
  for (const auto& gls : rep.long_sides) rep.gls_chars.push_back(gls.chi);

  std::vector<int> type_i, type_iii;
  for (int di = 0; di < m; ++di) {
    DistinctIneq& d = rep.distinct[di];
    if (!d.wall) continue;
    bool from_flop = false, from_final = false, from_divisor = false, from_other_curve = false;
    for (int ai : d.members) {
      const auto& src = rep.assembled[ai].source;
      if (src.kind == IneqSource::Curve) {
        if (X.edges[src.edge].type == CurveType::MinusOneMinusOne)
          from_flop = true;
        else if (final_edges.count(src.edge))
          from_final = true;
        else
          from_other_curve = true;
      } else {
        from_divisor = true;
      }
    }
    if (from_flop) {
      d.type = WallType::I;
      type_i.push_back(di);
    } else if (from_final) {
      d.type = WallType::III;
      type_iii.push_back(di);
    } else if (from_divisor) {
      d.type = WallType::Zero;
    } else {
      throw invariant_error("wall arising only from a redundant-type curve");
    }
    (void)from_other_curve;
  }

  // wall census and the structural laws
  {
    int flop_edges = 0;
    std::set<std::vector<Int>> flop_vectors;
    for (size_t e = 0; e < X.edges.size(); ++e) {
      if (X.edges[e].type != CurveType::MinusOneMinusOne) continue;
      ++flop_edges;
      Inequality q = curve_inequality(X, M, U, (int)e);
      int di = rep.distinct_index(q.coeff);
      flop_vectors.insert(normalize(q.coeff));
      if (!rep.distinct[di].wall)
        throw invariant_error("(-1,-1)-curve inequality is not a facet");
      if (rep.distinct[di].type != WallType::I)
        throw invariant_error("(-1,-1)-curve wall not classified as type I");
    }
    if ((int)flop_vectors.size() != flop_edges || (int)type_i.size() != flop_edges)
      throw invariant_error("type I census mismatch");
    if ((int)type_iii.size() != rep.n_gls)
      throw invariant_error("type III census mismatch");

    for (const auto& gls : rep.long_sides) {
      int di = rep.distinct_index(gls.wall_coeff);
      if (di < 0 || !rep.distinct[di].wall || rep.distinct[di].type != WallType::III)
        throw invariant_error("generalised long side does not give a type III wall");
      for (int e : gls.final_edges) {
        Inequality q = curve_inequality(X, M, U, e);
        if (q.coeff != gls.wall_coeff)
          throw invariant_error("final curve inequality differs from the long-side wall");
      }
      for (int e : gls.edges) {
        if (std::find(gls.final_edges.begin(), gls.final_edges.end(), e) != gls.final_edges.end())
          continue;
        Inequality q = curve_inequality(X, M, U, e);
        if (rep.distinct[rep.distinct_index(q.coeff)].wall)
          throw invariant_error("non-final long-side curve gives an irredundant inequality");
      }
    }

    for (size_t v = 0; v < X.vertices.size(); ++v)
      for (Int psi : M.vertex_marks[v]) {
        std::vector<Int> unit(r, 0);
        unit[psi] = 1;
        int di = rep.distinct_index(unit);
        if (di < 0 || !rep.distinct[di].wall)
          throw invariant_error("divisor subsheaf inequality is not a wall");
      }

    for (size_t e = 0; e < X.edges.size(); ++e) {
      if (!X.edges[e].compact) continue;
      Inequality q = curve_inequality(X, M, U, (int)e);
      int di = rep.distinct_index(q.coeff);
      if (X.edges[e].type == CurveType::OneMinusThree && rep.distinct[di].wall)
        throw invariant_error("(1,-3)-curve inequality defines a wall");
      if (X.edges[e].type == CurveType::ZeroMinusTwo) {
        Int chi = M.edge_char[e];
        bool chain_has_flop = false;
        for (int f : M.chain_edges[chi])
          if (X.edges[f].type == CurveType::MinusOneMinusOne) chain_has_flop = true;
        if (chain_has_flop && rep.distinct[di].wall)
          throw invariant_error("boundary curve on a chain with a flop stays irredundant");
      }
    }

    for (int di : type_i)
      for (Int c : rep.distinct[di].coeff)
        if (c != 0 && c != 1) throw invariant_error("type I wall with coefficient above one");
    for (int di : type_iii)
      for (Int c : rep.distinct[di].coeff)
        if (c != 0 && c != 1) throw invariant_error("type III wall with coefficient above one");
  }

  // canonical wall order: by coefficient vector
  for (int di = 0; di < m; ++di)
    if (rep.distinct[di].wall) rep.walls.push_back(di);
  std::sort(rep.walls.begin(), rep.walls.end(), [&](int a, int b) {
    return rep.distinct[a].coeff < rep.distinct[b].coeff;
  });

  // wall support: edges whose puzzle lies inside the wall support, and the
  // divisor contracted by the wall
  for (int di : rep.walls) {
    const auto& coeff = rep.distinct[di].coeff;
    std::vector<int> ew;
    for (size_t e = 0; e < X.edges.size(); ++e) {
      if (!X.edges[e].compact) continue;
      bool inside = true;
      for (Int chi : U.unlock((int)e).chars)
        if (coeff[chi] == 0) inside = false;
      if (inside) ew.push_back((int)e);
    }
    std::vector<int> dv;
    for (size_t v = 0; v < X.vertices.size(); ++v) {
      if (!X.is_interior_vertex((int)v)) continue;
      bool all = true;
      for (int e : X.vertices[v].edges)
        if (std::find(ew.begin(), ew.end(), e) == ew.end()) all = false;
      if (all) dv.push_back((int)v);
    }
    rep.wall_edges.push_back(ew);
    rep.wall_divisor.push_back(dv);
  }

  return rep;
}

bool verify_certificate(const WallReport& report, int distinct_index) {
  const DistinctIneq& d = report.distinct[distinct_index];
  if (!d.certificate) return false;
  std::vector<Rat> sum(d.coeff.size(), 0);
  for (const auto& [mult, j] : d.certificate->parts) {
    if (mult <= 0) return false;
    for (size_t c = 0; c < sum.size(); ++c)
      sum[c] += mult * Rat(report.distinct[j].coeff[c]);
  }
  for (size_t c = 0; c < sum.size(); ++c)
    if (sum[c] != Rat(d.coeff[c])) return false;
  return true;
}

}  // namespace ghilb
