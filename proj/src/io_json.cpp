#include "ghilb/io_json.hpp"

#include <sstream>

namespace ghilb {

namespace {

ojson char_tuple(const GroupData& G, Int chi) {
  ojson t = ojson::array();
  for (Int v : G.decode(chi)) t.push_back(v);
  return t;
}

ojson monomial_json(const Monomial& m) { return ojson::array({m.e[0], m.e[1], m.e[2]}); }

ojson coeff_json(const GroupData& G, const std::vector<Int>& coeff) {
  ojson o = ojson::object();
  for (size_t c = 0; c < coeff.size(); ++c) {
    if (coeff[c] == 0) continue;
    std::ostringstream key;
    auto t = G.decode((Int)c);
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) key << ',';
      key << t[i];
    }
    o[key.str()] = coeff[c];
  }
  return o;
}

ojson rat_json(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

ojson complex_json(const Complex& X) {
  const GroupData& G = X.group;
  ojson j;
  j["group"] = ojson::object();
  j["group"]["spec"] = G.spec_string();
  j["group"]["order"] = G.order();
  ojson factors = ojson::array();
  for (Int f : G.factors()) factors.push_back(f);
  j["group"]["factors"] = factors;

  ojson verts = ojson::array();
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    ojson o;
    o["id"] = (int)v;
    o["coords"] = ojson::array({X.vertices[v].p.num[0], X.vertices[v].p.num[1],
                                X.vertices[v].p.num[2]});
    o["den"] = X.vertices[v].p.den;
    o["kind"] = to_string(X.vertices[v].kind);
    o["marks"] = ojson::array();
    verts.push_back(o);
  }
  j["vertices"] = verts;

  ojson edges = ojson::array();
  for (size_t e = 0; e < X.edges.size(); ++e) {
    ojson o;
    o["v1"] = X.edges[e].v1;
    o["v2"] = X.edges[e].v2;
    o["curve_type"] = to_string(X.edges[e].type);
    o["character"] = nullptr;
    o["ratio"] = nullptr;
    o["gig"] = nullptr;
    edges.push_back(o);
  }
  j["edges"] = edges;

  ojson tris = ojson::array();
  for (const auto& t : X.tris) {
    ojson o;
    o["vertices"] = ojson::array({t.v[0], t.v[1], t.v[2]});
    o["ggraph"] = t.graph;
    tris.push_back(o);
  }
  j["triangles"] = tris;
  return j;
}

ojson recipe_json(const Complex& X, const Marking& M) {
  ojson j = complex_json(X);
  const GroupData& G = X.group;
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    ojson marks = ojson::array();
    for (Int chi : M.vertex_marks[v]) marks.push_back(char_tuple(G, chi));
    j["vertices"][v]["marks"] = marks;
  }
  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (!X.edges[e].compact) continue;
    j["edges"][e]["character"] = char_tuple(G, M.edge_char[e]);
    ojson ratio;
    ratio["num"] = monomial_json(M.edge_ratio[e].first);
    ratio["den"] = monomial_json(M.edge_ratio[e].second);
    j["edges"][e]["ratio"] = ratio;
  }
  return j;
}

ojson walls_json(const Complex& X, const Marking& M, Unlocker& U, const WallReport& rep) {
  ojson j = recipe_json(X, M);
  const GroupData& G = X.group;
  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (!X.edges[e].compact) continue;
    ojson gig = ojson::array();
    for (Int chi : U.unlock((int)e).chars) gig.push_back(char_tuple(G, chi));
    j["edges"][e]["gig"] = gig;
  }

  ojson ineqs = ojson::array();
  for (const auto& q : rep.assembled) {
    ojson o;
    o["label"] = q.label;
    o["coeffs"] = coeff_json(G, q.coeff);
    ojson src;
    switch (q.source.kind) {
      case IneqSource::Curve:
        src["kind"] = "curve";
        src["edge"] = q.source.edge;
        break;
      case IneqSource::Subsheaf:
        src["kind"] = "subsheaf";
        src["vertex"] = q.source.vertex;
        src["character"] = char_tuple(G, q.source.chi);
        break;
      case IneqSource::Quotient: {
        src["kind"] = "quotient";
        ojson dv = ojson::array();
        for (int v : q.source.divisor) dv.push_back(v);
        src["divisor"] = dv;
        break;
      }
    }
    o["source"] = src;
    const DistinctIneq& d = rep.of(q);
    if (d.wall) {
      o["status"] = "wall(" + to_string(d.type) + ")";
      o["certificate"] = nullptr;
    } else {
      o["status"] = "redundant";
      ojson cert = ojson::array();
      for (const auto& [mult, di] : d.certificate->parts) {
        ojson part;
        part["multiplier"] = rat_json(mult);
        part["coeffs"] = coeff_json(G, rep.distinct[di].coeff);
        cert.push_back(part);
      }
      o["certificate"] = cert;
    }
    ineqs.push_back(o);
  }
  j["inequalities"] = ineqs;

  ojson walls = ojson::array();
  for (size_t w = 0; w < rep.walls.size(); ++w) {
    const DistinctIneq& d = rep.distinct[rep.walls[w]];
    ojson o;
    o["type"] = to_string(d.type);
    o["coeffs"] = coeff_json(G, d.coeff);
    ojson refs = ojson::array();
    for (int ai : d.members) refs.push_back(rep.assembled[ai].label);
    o["inequality_ref"] = refs;
    ojson se = ojson::array();
    for (int e : rep.wall_edges[w]) se.push_back(e);
    o["support_edges"] = se;
    ojson dv = ojson::array();
    for (int v : rep.wall_divisor[w]) dv.push_back(v);
    o["divisor"] = dv;
    walls.push_back(o);
  }
  j["walls"] = walls;
  return j;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

namespace {

ojson copy_known(const ojson& src, const std::vector<std::string>& keys) {
  ojson out = ojson::object();
  for (const auto& [k, v] : src.items()) {
    bool known = false;
    for (const auto& key : keys)
      if (k == key) known = true;
    if (!known) throw std::invalid_argument("unknown key in document: " + k);
  }
  for (const auto& key : keys)
    if (src.contains(key)) out[key] = src.at(key);
  return out;
}

}  // namespace

ojson rebuild_json(const ojson& j) {
  ojson out = copy_known(j, {"group", "vertices", "edges", "triangles", "inequalities", "walls"});
  if (out.contains("group"))
    out["group"] = copy_known(j.at("group"), {"spec", "order", "factors"});
  if (out.contains("vertices")) {
    ojson vs = ojson::array();
    for (const auto& v : j.at("vertices"))
      vs.push_back(copy_known(v, {"id", "coords", "den", "kind", "marks"}));
    out["vertices"] = vs;
  }
  if (out.contains("edges")) {
    ojson es = ojson::array();
    for (const auto& e : j.at("edges"))
      es.push_back(copy_known(e, {"v1", "v2", "curve_type", "character", "ratio", "gig"}));
    out["edges"] = es;
  }
  if (out.contains("triangles")) {
    ojson ts = ojson::array();
    for (const auto& t : j.at("triangles")) ts.push_back(copy_known(t, {"vertices", "ggraph"}));
    out["triangles"] = ts;
  }
  if (out.contains("inequalities")) {
    ojson qs = ojson::array();
    for (const auto& q : j.at("inequalities"))
      qs.push_back(copy_known(q, {"label", "coeffs", "source", "status", "certificate"}));
    out["inequalities"] = qs;
  }
  if (out.contains("walls")) {
    ojson ws = ojson::array();
    for (const auto& w : j.at("walls"))
      ws.push_back(copy_known(w, {"type", "coeffs", "inequality_ref", "support_edges", "divisor"}));
    out["walls"] = ws;
  }
  return out;
}

}  // namespace ghilb
