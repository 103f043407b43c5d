#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ghilb/figures.hpp"
#include "ghilb/io_json.hpp"
#include "ghilb/verify.hpp"

using namespace ghilb;

namespace {

struct Pipeline {
  GroupData G;
  Complex X;
  Marking M;

  explicit Pipeline(const std::string& spec)
      : G(GroupData::parse(spec)), X(build_complex(walk_fan(G))), M(mark_all(X)) {}
};

std::string theta_term(const GroupData& G, Int chi, Int coeff) {
  std::ostringstream os;
  if (coeff != 1) os << coeff << ' ';
  os << "theta_";
  auto t = G.decode(chi);
  if (t.size() > 1) os << '{';
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  if (t.size() > 1) os << '}';
  return os.str();
}

std::string ineq_text(const GroupData& G, const std::vector<Int>& coeff) {
  std::ostringstream os;
  bool first = true;
  for (size_t c = 0; c < coeff.size(); ++c) {
    if (coeff[c] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << theta_term(G, (Int)c, coeff[c]);
  }
  os << " > 0";
  return os.str();
}

void write_out(const std::string& out_dir, const std::string& name, const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
  f << content;
}

std::string complex_text(const Complex& X, const Marking* M) {
  std::ostringstream os;
  os << "group " << X.group.spec_string() << ": " << X.vertices.size() << " vertices, "
     << X.edges.size() << " edges, " << X.tris.size() << " triangles, " << X.regulars.size()
     << " regular triangles\n";
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    os << "  v" << v << ' ' << to_string(X.vertices[v].p) << ' ' << to_string(X.vertices[v].kind);
    if (M && !M->vertex_marks[v].empty()) {
      os << " marks";
      for (Int chi : M->vertex_marks[v]) os << ' ' << chi;
    }
    os << '\n';
  }
  for (size_t e = 0; e < X.edges.size(); ++e) {
    os << "  e" << e << " v" << X.edges[e].v1 << "-v" << X.edges[e].v2 << ' '
       << to_string(X.edges[e].type);
    if (M && X.edges[e].compact)
      os << " mark " << M->edge_char[e] << " ratio " << to_string(M->edge_ratio[e].first) << " : "
         << to_string(M->edge_ratio[e].second);
    os << '\n';
  }
  for (size_t t = 0; t < X.regulars.size(); ++t) {
    const auto& reg = X.regulars[t];
    os << "  regular triangle " << t << " side " << reg.side
       << (reg.meeting_of_champions ? " (meeting of champions)" : " (corner)") << '\n';
  }
  if (X.trivalent_vertex)
    os << "  trivalent vertex v" << *X.trivalent_vertex << " (side-0 meeting of champions)\n";
  return os.str();
}

int emit_figure_or_json(const Pipeline& P, const Marking* M, const std::string& format,
                        const std::string& out, const std::string& stem) {
  if (format == "svg")
    write_out(out, stem + ".svg", emit_svg(P.X, M));
  else if (format == "tikz")
    write_out(out, stem + ".tex", emit_tikz(P.X, M));
  else if (format == "json")
    write_out(out, stem + ".json", dump_json(M ? recipe_json(P.X, *M) : complex_json(P.X)));
  else
    write_out(out, stem + ".txt", complex_text(P.X, M));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the distinguished crepant resolution of C^3/G"};
  app.require_subcommand(1);

  std::string spec, format = "text", out_dir, edge_opt, char_opt;
  int index_opt = 0, max_quotient = 0;
  Int sweep_max = 0;
  bool strict = false;

  auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
    if (needs_spec) cmd->add_option("spec", spec, "group, e.g. \"1/6(1,2,3)\"")->required();
    cmd->add_option("--format", format, "text|json|svg|tikz");
    cmd->add_option("--out", out_dir, "write artifacts into this directory");
    cmd->add_option("--max-quotient-size", max_quotient, "cap on quotient divisor size");
    cmd->add_flag("--strict", strict, "fail on any cross-check warning");
  };

  auto* c_tri = app.add_subcommand("triangulate", "fan and simplicial surface");
  add_common(c_tri);
  auto* c_rec = app.add_subcommand("recipe", "triangulation with character markings");
  add_common(c_rec);
  auto* c_gig = app.add_subcommand("gig", "total G-igsaw piece of one curve");
  add_common(c_gig);
  c_gig->add_option("--edge", edge_opt, "edge by vertex ids, e.g. 3,5");
  c_gig->add_option("--char", char_opt, "curve character");
  c_gig->add_option("--index", index_opt, "which curve of that character (0-based)");
  auto* c_walls = app.add_subcommand("walls", "chamber inequalities and walls");
  add_common(c_walls);
  auto* c_check = app.add_subcommand("check", "full invariant suite for one group");
  add_common(c_check);
  auto* c_sweep = app.add_subcommand("sweep", "invariant suite over all groups up to an order");
  c_sweep->add_option("max_order", sweep_max, "largest group order")->required();
  c_sweep->add_flag("--strict", strict);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (c_tri->parsed()) {
      Pipeline P(spec);
      return emit_figure_or_json(P, nullptr, format, out_dir, "triangulate");
    }
    if (c_rec->parsed()) {
      Pipeline P(spec);
      return emit_figure_or_json(P, &P.M, format, out_dir, "recipe");
    }
    if (c_gig->parsed()) {
      Pipeline P(spec);
      Unlocker U(P.X, P.M);
      int edge = -1;
      if (!edge_opt.empty()) {
        auto comma = edge_opt.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--edge expects v1,v2");
        int v1 = std::stoi(edge_opt.substr(0, comma));
        int v2 = std::stoi(edge_opt.substr(comma + 1));
        edge = P.X.edge_index(v1, v2);
        if (edge < 0) throw std::invalid_argument("no such edge");
      } else if (!char_opt.empty()) {
        std::vector<Int> tuple;
        std::stringstream ss(char_opt);
        std::string item;
        while (std::getline(ss, item, ',')) tuple.push_back(std::stoll(item));
        Int chi = P.G.encode(tuple);
        const auto& edges = P.M.chain_edges[chi];
        if (index_opt < 0 || index_opt >= (int)edges.size())
          throw std::invalid_argument("character/index does not name a curve");
        edge = edges[index_opt];
      } else {
        throw std::invalid_argument("gig needs --edge or --char");
      }
      if (!P.X.edges[edge].compact) throw std::invalid_argument("edge is not a compact curve");
      const GigsawPiece& piece = U.unlock(edge);
      auto [t0, t1] = P.X.edge_tris(edge);
      auto oracle = gigsaw_oracle(P.X.fan.graphs[P.X.tris[t0].graph],
                                  P.X.fan.graphs[P.X.tris[t1].graph]);
      std::ostringstream os;
      os << "curve v" << P.X.edges[edge].v1 << "-v" << P.X.edges[edge].v2 << " marked "
         << P.M.edge_char[edge] << ", type " << to_string(P.X.edges[edge].type) << "\n";
      os << "total G-igsaw piece:";
      for (Int chi : piece.chars) os << ' ' << chi;
      os << "\nprovenance:\n";
      for (const auto& entry : piece.trace) {
        os << "  " << entry.chi << "  ";
        switch (entry.step) {
          case PieceStep::Chain: os << "curve character"; break;
          case PieceStep::DelPezzo: os << "del Pezzo divisor at v" << entry.via; break;
          case PieceStep::Divisor: os << "divisor at v" << entry.via; break;
          case PieceStep::Recursion:
            os << "unlocked curve v" << P.X.edges[entry.via].v1 << "-v" << P.X.edges[entry.via].v2
               << " (marked " << P.M.edge_char[entry.via] << ")";
            break;
        }
        os << '\n';
      }
      bool match = oracle == piece.chars;
      os << "oracle: " << (match ? "MATCH" : "MISMATCH") << "\n";
      write_out(out_dir, "gig.txt", os.str());
      if (!match) throw internal_error("unlocking disagrees with the cluster oracle");
      return 0;
    }
    if (c_walls->parsed()) {
      Pipeline P(spec);
      Unlocker U(P.X, P.M);
      ChamberOptions copt;
      copt.max_quotient_size = max_quotient;
      WallReport rep = compute_walls(P.X, P.M, U, copt);
      if (strict && !rep.warnings.empty()) {
        for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
        return 2;
      }
      if (format == "json") {
        write_out(out_dir, "walls.json", dump_json(walls_json(P.X, P.M, U, rep)));
        return 0;
      }
      std::ostringstream os;
      os << "inequalities for " << P.G.spec_string() << ":\n";
      for (const auto& q : rep.assembled) {
        const DistinctIneq& d = rep.of(q);
        os << "  (" << q.label << ") " << ineq_text(P.G, q.coeff);
        if (d.wall) {
          os << "   [wall " << to_string(d.type) << "]";
        } else {
          os << "   [redundant =";
          for (const auto& [mult, di] : d.certificate->parts) {
            os << ' ';
            if (mult != 1) os << mult << "*";
            const auto& mem = rep.distinct[di].members;
            os << '(' << (mem.empty() ? std::string("?") : rep.assembled[mem[0]].label) << ')';
          }
          os << ']';
        }
        os << '\n';
      }
      os << "walls (" << rep.walls.size() << "):\n";
      for (size_t w = 0; w < rep.walls.size(); ++w) {
        const DistinctIneq& d = rep.distinct[rep.walls[w]];
        os << "  " << to_string(d.type) << ": " << ineq_text(P.G, d.coeff) << '\n';
      }
      int n_i = 0, n_iii = 0, n_0 = 0;
      for (int di : rep.walls) {
        if (rep.distinct[di].type == WallType::I) ++n_i;
        if (rep.distinct[di].type == WallType::III) ++n_iii;
        if (rep.distinct[di].type == WallType::Zero) ++n_0;
      }
      os << "census: " << n_i << " type I (= " << rep.n_minus11 << " flop curves), " << n_iii
         << " type III (= " << rep.n_gls << " generalised long sides), " << n_0 << " type 0; "
         << rep.quotient_count << " quotient divisors enumerated\n";
      write_out(out_dir, "walls.txt", os.str());
      return 0;
    }
    if (c_check->parsed()) {
      CheckOptions copt;
      copt.chamber.max_quotient_size = max_quotient;
      CheckReport rep = run_full_check(GroupData::parse(spec), copt);
      for (const auto& w : rep.warnings) std::cout << "warning: " << w << '\n';
      for (const auto& e : rep.errors) std::cout << "error: " << e << '\n';
      std::cout << rep.group << (rep.ok ? " OK" : " FAILED") << " (" << rep.cones << " cones, "
                << rep.compact_edges << " curves, " << rep.walls << " walls)\n";
      if (!rep.ok) return 2;
      if (strict && !rep.warnings.empty()) return 2;
      return 0;
    }
    if (c_sweep->parsed()) {
      bool all_ok = true;
      for (const GroupData& G : sweep_groups(sweep_max)) {
        CheckReport rep = run_full_check(G);
        if (!rep.ok) all_ok = false;
        std::cout << rep.group << (rep.ok ? " OK" : " FAILED") << " (" << rep.cones << " cones, "
                  << rep.compact_edges << " curves, " << rep.walls << " walls)\n";
        for (const auto& e : rep.errors) std::cout << "  error: " << e << '\n';
        if (strict && !rep.warnings.empty()) {
          for (const auto& w : rep.warnings) std::cout << "  warning: " << w << '\n';
          all_ok = false;
        }
      }
      return all_ok ? 0 : 2;
    }
  } catch (const internal_error& ex) {
    std::cerr << "internal inconsistency: " << ex.what() << '\n';
    return 3;
  } catch (const invariant_error& ex) {
    std::cerr << "invariant violation: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 1;
}
