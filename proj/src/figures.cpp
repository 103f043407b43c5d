#include "ghilb/figures.hpp"

#include <sstream>

namespace ghilb {

namespace {

// corner positions of the drawing, in tenths of a pixel
constexpr Int PX[3] = {3600, 6800, 400};
constexpr Int PY[3] = {400, 6000, 6000};

struct Pt {
  Int x10, y10;
};

Pt project(const LatticePoint& p, Int mult = 1, Int extra_den = 1) {
  Int den = p.den * extra_den;
  Int nx = 0, ny = 0;
  for (int i = 0; i < 3; ++i) {
    nx += p.num[i] * PX[i] * mult;
    ny += p.num[i] * PY[i] * mult;
  }
  return Pt{(nx + den / 2) / den, (ny + den / 2) / den};
}

std::string tenths(Int v) {
  std::ostringstream os;
  if (v < 0) {
    os << '-';
    v = -v;
  }
  os << v / 10 << '.' << v % 10;
  return os.str();
}

std::string char_text(const GroupData& G, Int chi) {
  auto t = G.decode(chi);
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  return os.str();
}

Pt midpoint(const Complex& X, int e) {
  const auto& a = X.vertices[X.edges[e].v1].p;
  const auto& b = X.vertices[X.edges[e].v2].p;
  LatticePoint s;
  s.den = a.den;
  for (int i = 0; i < 3; ++i) s.num[i] = a.num[i] + b.num[i];
  return project(s, 1, 2);
}

}  // namespace

std::string emit_svg(const Complex& X, const Marking* M) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 720 640\">\n";
  os << "<!-- " << X.group.spec_string() << " -->\n";
  for (size_t e = 0; e < X.edges.size(); ++e) {
    Pt a = project(X.vertices[X.edges[e].v1].p);
    Pt b = project(X.vertices[X.edges[e].v2].p);
    const char* extra = "";
    const char* width = "1.4";
    if (!X.edges[e].compact)
      width = "1.6";
    else if (X.edges[e].type == CurveType::MinusOneMinusOne)
      extra = " stroke-dasharray=\"5 4\"";
    else
      width = "2.6";
    os << "<line x1=\"" << tenths(a.x10) << "\" y1=\"" << tenths(a.y10) << "\" x2=\""
       << tenths(b.x10) << "\" y2=\"" << tenths(b.y10) << "\" stroke=\"black\" stroke-width=\""
       << width << "\"" << extra << "/>\n";
  }
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    Pt p = project(X.vertices[v].p);
    os << "<circle cx=\"" << tenths(p.x10) << "\" cy=\"" << tenths(p.y10)
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  if (M) {
    for (size_t e = 0; e < X.edges.size(); ++e) {
      if (!X.edges[e].compact) continue;
      Pt p = midpoint(X, (int)e);
      std::string text = char_text(X.group, M->edge_char[e]);
      Int w10 = (Int)text.size() * 80 + 60;
      os << "<rect x=\"" << tenths(p.x10 - w10 / 2) << "\" y=\"" << tenths(p.y10 - 75)
         << "\" width=\"" << tenths(w10) << "\" height=\"15\" fill=\"white\"/>\n";
      os << "<text x=\"" << tenths(p.x10) << "\" y=\"" << tenths(p.y10 + 45)
         << "\" font-size=\"13\" text-anchor=\"middle\">" << text << "</text>\n";
    }
    for (size_t v = 0; v < X.vertices.size(); ++v) {
      if (M->vertex_marks[v].empty()) continue;
      Pt p = project(X.vertices[v].p);
      std::string text;
      for (size_t i = 0; i < M->vertex_marks[v].size(); ++i) {
        if (i) text += ',';
        text += char_text(X.group, M->vertex_marks[v][i]);
      }
      Int w10 = (Int)text.size() * 80 + 80;
      os << "<rect x=\"" << tenths(p.x10 - w10 / 2) << "\" y=\"" << tenths(p.y10 - 85)
         << "\" width=\"" << tenths(w10)
         << "\" height=\"17\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
      os << "<text x=\"" << tenths(p.x10) << "\" y=\"" << tenths(p.y10 + 45)
         << "\" font-size=\"13\" text-anchor=\"middle\">" << text << "</text>\n";
    }
  }
  static const char* corner_names[3] = {"e1", "e2", "e3"};
  for (int i = 0; i < 3; ++i) {
    Pt p = project(X.group.corner(i));
    Int dy = (i == 0) ? -120 : 200;
    os << "<text x=\"" << tenths(p.x10) << "\" y=\"" << tenths(p.y10 + dy)
       << "\" font-size=\"15\" text-anchor=\"middle\">" << corner_names[i] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_tikz(const Complex& X, const Marking* M) {
  std::ostringstream os;
  os << "% " << X.group.spec_string() << "\n";
  os << "\\begin{tikzpicture}[scale=0.02]\n";
  auto coord = [&](const Pt& p) {
    std::ostringstream c;
    c << '(' << tenths(p.x10) << ',' << tenths(6400 - p.y10) << ')';
    return c.str();
  };
  for (size_t e = 0; e < X.edges.size(); ++e) {
    Pt a = project(X.vertices[X.edges[e].v1].p);
    Pt b = project(X.vertices[X.edges[e].v2].p);
    std::string style = "";
    if (X.edges[e].compact && X.edges[e].type == CurveType::MinusOneMinusOne)
      style = "[dashed]";
    else if (X.edges[e].compact)
      style = "[line width=1.1pt]";
    os << "\\draw" << style << ' ' << coord(a);
    if (M && X.edges[e].compact)
      os << " to node[fill=white,inner sep=1pt] {$" << char_text(X.group, M->edge_char[e])
         << "$} " << coord(b) << ";\n";
    else
      os << " to " << coord(b) << ";\n";
  }
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    Pt p = project(X.vertices[v].p);
    if (M && !M->vertex_marks[v].empty()) {
      std::string text;
      for (size_t i = 0; i < M->vertex_marks[v].size(); ++i) {
        if (i) text += "\\\\";
        text += char_text(X.group, M->vertex_marks[v][i]);
      }
      os << "\\node[draw,fill=white,inner sep=2pt,align=center] at " << coord(p) << " {$" << text
         << "$};\n";
    } else {
      os << "\\node at " << coord(p) << " {$\\bullet$};\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace ghilb
