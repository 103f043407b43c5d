#include "ghilb/ggraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace ghilb {

namespace {

using I128 = __int128;

I128 weight_of(const std::array<Int, 3>& v, const Monomial& m) {
  return (I128)v[0] * m.e[0] + (I128)v[1] * m.e[1] + (I128)v[2] * m.e[2];
}

Int gcd3(Int a, Int b, Int c) {
  return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// primitive integer normal to span(p,q), scaled into the dual lattice M
std::array<Int, 3> dual_normal(const GroupData& G, const LatticePoint& p, const LatticePoint& q) {
  auto n = cross(p.num, q.num);
  Int g = gcd3(n[0], n[1], n[2]);
  if (g == 0) throw internal_error("degenerate edge normal");
  for (auto& c : n) c /= g;
  // scale by the order of the character of x^n in the group
  Monomial mn{{n[0], n[1], n[2]}};
  Int chi = G.character_of(mn);
  Int t = 1;
  Int acc = chi;
  while (!G.is_trivial(acc)) {
    acc = G.chi_add(acc, chi);
    ++t;
  }
  return {n[0] * t, n[1] * t, n[2] * t};
}

}  // namespace

GGraph minimal_graph(const GroupData& G, const std::array<Int, 3>& v) {
  if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0)
    throw std::invalid_argument("minimal_graph needs a strictly positive weight vector");
  const Int r = G.order();
  GGraph out;
  out.basis.assign(r, Monomial{});
  std::vector<I128> best(r, -1);
  std::vector<char> seen(r, 0);
  Monomial m;
  for (Int a = 0; a < r; ++a)
    for (Int b = 0; b < r; ++b)
      for (Int c = 0; c < r; ++c) {
        m.e = {a, b, c};
        Int chi = G.character_of(m);
        I128 w = weight_of(v, m);
        if (!seen[chi] || w < best[chi] || (w == best[chi] && m < out.basis[chi])) {
          seen[chi] = 1;
          best[chi] = w;
          out.basis[chi] = m;
        }
      }
  return out;
}

std::vector<Int> socle(const GroupData& G, const GGraph& g) {
  std::vector<Int> out;
  for (Int chi = 0; chi < (Int)g.basis.size(); ++chi) {
    const Monomial& m = g.basis[chi];
    bool top = true;
    for (int axis = 0; axis < 3 && top; ++axis) {
      Monomial mx = m;
      mx.e[axis] += 1;
      if (g.contains(G, mx)) top = false;
    }
    if (top) out.push_back(chi);
  }
  return out;
}

std::vector<Int> gigsaw_oracle(const GGraph& a, const GGraph& b) {
  std::vector<Int> out;
  for (Int chi = 0; chi < (Int)a.basis.size(); ++chi)
    if (a.basis[chi] != b.basis[chi]) out.push_back(chi);
  return out;
}

void edge_ratio(const GroupData& G, const LatticePoint& p, const LatticePoint& q, Monomial& m1,
                Monomial& m2) {
  auto n = dual_normal(G, p, q);
  Monomial pos, neg;
  for (int i = 0; i < 3; ++i) {
    if (n[i] > 0)
      pos.e[i] = n[i];
    else
      neg.e[i] = -n[i];
  }
  if (pos < neg) std::swap(pos, neg);
  m1 = pos;
  m2 = neg;
  if (G.character_of(m1) != G.character_of(m2))
    throw internal_error("edge ratio is not invariant: " + to_string(m1) + " / " + to_string(m2));
}

std::vector<Int> gigsaw_degrees(const GroupData& G, const GGraph& a, const GGraph& b,
                                const Monomial& m1, const Monomial& m2) {
  const Int r = (Int)a.basis.size();
  std::array<Int, 3> step{m1.e[0] - m2.e[0], m1.e[1] - m2.e[1], m1.e[2] - m2.e[2]};
  std::vector<Int> deg(r, 0);
  for (Int chi = 0; chi < r; ++chi) {
    std::array<Int, 3> d{b.basis[chi].e[0] - a.basis[chi].e[0],
                         b.basis[chi].e[1] - a.basis[chi].e[1],
                         b.basis[chi].e[2] - a.basis[chi].e[2]};
    if (d == std::array<Int, 3>{0, 0, 0}) continue;
    Int k = 0;
    for (int i = 0; i < 3; ++i)
      if (step[i] != 0) {
        k = d[i] / step[i];
        break;
      }
    if (k == 0 || d != std::array<Int, 3>{k * step[0], k * step[1], k * step[2]})
      throw internal_error("basis change across edge is not a power of the edge ratio (chi=" +
                           std::to_string(chi) + ")");
    deg[chi] = k;
  }
  Int echi = G.character_of(m1);
  if (deg[echi] == 0) throw internal_error("edge character does not move across its own edge");
  if (deg[echi] < 0)
    for (auto& k : deg) k = -k;
  for (Int chi = 0; chi < r; ++chi)
    if (deg[chi] < 0) throw internal_error("mixed ratio directions across an edge");
  if (deg[echi] != 1) throw internal_error("edge character moves by more than one ratio step");
  return deg;
}

std::string Fan::debug_dump() const {
  std::ostringstream os;
  for (size_t i = 0; i < graphs.size(); ++i) {
    os << "graph " << i << " rays";
    for (int rix : cones[i].rays) os << ' ' << to_string(junior[rix]);
    os << " :";
    for (const auto& m : graphs[i].basis) os << ' ' << to_string(m);
    os << '\n';
  }
  return os.str();
}

namespace {

struct JuniorMinTable {
  // min weight per character for each junior point, over the search box
  std::vector<std::vector<I128>> minw;  // [junior][chi]

  JuniorMinTable(const GroupData& G, const std::vector<LatticePoint>& junior) {
    const Int r = G.order();
    minw.assign(junior.size(), std::vector<I128>(r, -1));
    Monomial m;
    for (Int a = 0; a < r; ++a)
      for (Int b = 0; b < r; ++b)
        for (Int c = 0; c < r; ++c) {
          m.e = {a, b, c};
          Int chi = G.character_of(m);
          for (size_t j = 0; j < junior.size(); ++j) {
            I128 w = weight_of(junior[j].num, m);
            if (minw[j][chi] < 0 || w < minw[j][chi]) minw[j][chi] = w;
          }
        }
  }

  bool contains(const std::vector<LatticePoint>& junior, size_t j, const GGraph& g) const {
    for (size_t chi = 0; chi < g.basis.size(); ++chi)
      if (weight_of(junior[j].num, g.basis[chi]) != minw[j][chi]) return false;
    return true;
  }
};

std::string basis_key(const GGraph& g) {
  std::ostringstream os;
  for (const auto& m : g.basis) os << m.e[0] << ',' << m.e[1] << ',' << m.e[2] << ';';
  return os.str();
}

}  // namespace

Fan walk_fan(const GroupData& G) {
  Fan fan;
  fan.group = G;
  fan.junior = G.junior_points();
  const Int r = G.order();
  JuniorMinTable table(G, fan.junior);

  auto rays_of = [&](const GGraph& g) {
    std::vector<int> rays;
    for (size_t j = 0; j < fan.junior.size(); ++j)
      if (table.contains(fan.junior, j, g)) rays.push_back((int)j);
    return rays;
  };

  auto det_abs = [&](int i, int j, int k) {
    const auto &a = fan.junior[i].num, &b = fan.junior[j].num, &c = fan.junior[k].num;
    I128 d = (I128)a[0] * ((I128)b[1] * c[2] - (I128)b[2] * c[1]) -
             (I128)a[1] * ((I128)b[0] * c[2] - (I128)b[2] * c[0]) +
             (I128)a[2] * ((I128)b[0] * c[1] - (I128)b[1] * c[0]);
    return d < 0 ? -d : d;
  };

  // find a starting weight vector whose graph has a full-dimensional cone
  GGraph start;
  std::vector<int> start_rays;
  {
    Int s0 = 0, s1 = 0, s2 = 0;
    for (const auto& p : fan.junior) {
      s0 += p.num[0];
      s1 += p.num[1];
      s2 += p.num[2];
    }
    Int salt = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::array<Int, 3> v{3 * s0 + 1 + salt, 3 * s1 + 2 + salt * salt % 97,
                           3 * s2 + 4 + (salt * 7) % 101};
      if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0) v = {salt + 1, salt + 2, salt + 4};
      start = minimal_graph(G, v);
      start_rays = rays_of(start);
      if ((int)start_rays.size() == 3 &&
          det_abs(start_rays[0], start_rays[1], start_rays[2]) == (I128)r * r)
        break;
      start_rays.clear();
      salt = salt * 3 + attempt + 1;
    }
    if (start_rays.empty()) throw internal_error("could not find a generic starting weight");
  }

  std::map<std::string, int> index;
  std::vector<std::vector<int>> all_rays;
  std::queue<int> work;

  auto add_graph = [&](const GGraph& g, const std::vector<int>& rays) {
    auto key = basis_key(g);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = (int)fan.graphs.size();
    index.emplace(key, id);
    fan.graphs.push_back(g);
    all_rays.push_back(rays);
    work.push(id);
    return id;
  };

  add_graph(start, start_rays);

  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    const auto rays = all_rays[cur];
    if (rays.size() != 3) throw invariant_error("graph cone is not simplicial");
    if (det_abs(rays[0], rays[1], rays[2]) != (I128)r * r)
      throw invariant_error("graph cone is not unimodular");
    for (int f = 0; f < 3; ++f) {
      int p = rays[(f + 1) % 3], q = rays[(f + 2) % 3], s = rays[f];
      // boundary facets of sigma share a vanishing coordinate
      bool boundary = false;
      for (int axis = 0; axis < 3; ++axis)
        if (fan.junior[p].num[axis] == 0 && fan.junior[q].num[axis] == 0) boundary = true;
      if (boundary) continue;
      std::array<Int, 3> mid{fan.junior[p].num[0] + fan.junior[q].num[0],
                             fan.junior[p].num[1] + fan.junior[q].num[1],
                             fan.junior[p].num[2] + fan.junior[q].num[2]};
      bool found = false;
      for (Int k = 1; k <= 62 && !found; ++k) {
        std::array<Int, 3> v{(mid[0] << k) - fan.junior[s].num[0],
                             (mid[1] << k) - fan.junior[s].num[1],
                             (mid[2] << k) - fan.junior[s].num[2]};
        if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0) continue;
        GGraph nb = minimal_graph(G, v);
        if (nb == fan.graphs[cur]) continue;
        auto nrays = rays_of(nb);
        if (nrays.size() != 3) continue;
        if (std::find(nrays.begin(), nrays.end(), p) == nrays.end()) continue;
        if (std::find(nrays.begin(), nrays.end(), q) == nrays.end()) continue;
        add_graph(nb, nrays);
        found = true;
      }
      if (!found)
        throw internal_error("fan walk failed to close at facet " + to_string(fan.junior[p]) +
                             " - " + to_string(fan.junior[q]));
    }
  }

  if ((Int)fan.graphs.size() != r)
    throw invariant_error("fan has " + std::to_string(fan.graphs.size()) + " maximal cones, expected " +
                          std::to_string(r));

  // canonical order: by ray triples
  std::vector<int> perm(fan.graphs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
  for (auto& rv : all_rays) std::sort(rv.begin(), rv.end());
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return all_rays[a] < all_rays[b]; });

  std::vector<GGraph> graphs;
  std::vector<GraphCone> cones;
  for (int id : perm) {
    GraphCone cone;
    cone.rays = {all_rays[id][0], all_rays[id][1], all_rays[id][2]};
    for (int f = 0; f < 3; ++f) {
      const auto& p = fan.junior[cone.rays[(f + 1) % 3]];
      const auto& q = fan.junior[cone.rays[(f + 2) % 3]];
      auto n = dual_normal(G, p, q);
      const auto& s = fan.junior[cone.rays[f]].num;
      I128 side = (I128)n[0] * s[0] + (I128)n[1] * s[1] + (I128)n[2] * s[2];
      if (side == 0) throw internal_error("degenerate facet normal");
      if (side < 0)
        for (auto& c : n) c = -c;
      cone.facet_normals[f] = n;
    }
    cones.push_back(cone);
    graphs.push_back(fan.graphs[id]);
  }
  fan.graphs = std::move(graphs);
  fan.cones = std::move(cones);

  // tiling checks: every junior point is a ray, every interior facet is
  // shared by exactly two cones
  {
    std::set<int> used;
    std::map<std::pair<int, int>, int> facet_count;
    for (const auto& cone : fan.cones) {
      for (int rix : cone.rays) used.insert(rix);
      for (int f = 0; f < 3; ++f) {
        int a = cone.rays[(f + 1) % 3], b = cone.rays[(f + 2) % 3];
        facet_count[{std::min(a, b), std::max(a, b)}]++;
      }
    }
    if (used.size() != fan.junior.size())
      throw invariant_error("not every junior point appears as a ray of the fan");
    for (const auto& [key, cnt] : facet_count) {
      const auto& p = fan.junior[key.first];
      const auto& q = fan.junior[key.second];
      bool boundary = false;
      for (int axis = 0; axis < 3; ++axis)
        if (p.num[axis] == 0 && q.num[axis] == 0) boundary = true;
      int expect = boundary ? 1 : 2;
      if (cnt != expect)
        throw invariant_error("facet " + to_string(p) + " - " + to_string(q) + " lies in " +
                              std::to_string(cnt) + " cones, expected " + std::to_string(expect));
    }
  }

  // graph sanity: staircase, one per character, unit present
  for (const auto& g : fan.graphs) {
    if (!g.basis[0].is_unit()) throw invariant_error("graph does not contain the unit monomial");
    for (Int chi = 0; chi < r; ++chi) {
      if (G.character_of(g.basis[chi]) != chi)
        throw invariant_error("graph basis monomial has wrong character");
      const Monomial& m = g.basis[chi];
      for (int axis = 0; axis < 3; ++axis) {
        if (m.e[axis] > r) throw invariant_error("graph exponent exceeds group order");
        if (m.e[axis] > 0) {
          Monomial d = m;
          d.e[axis] -= 1;
          if (!g.contains(G, d)) throw invariant_error("graph is not divisor closed");
        }
      }
    }
  }
  return fan;
}

}  // namespace ghilb
