#include "ghilb/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ghilb {

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  static const char* vars = "xyz";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << vars[i];
    if (m.e[i] != 1) os << '^' << m.e[i];
  }
  return os.str();
}

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << '(' << p.num[0] << ',' << p.num[1] << ',' << p.num[2] << ")/" << p.den;
  return os.str();
}

namespace {

Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

bool read_char(const std::string& s, size_t& i, char c) {
  skip_ws(s, i);
  if (i < s.size() && s[i] == c) {
    ++i;
    return true;
  }
  return false;
}

bool read_int(const std::string& s, size_t& i, Int& out) {
  skip_ws(s, i);
  size_t j = i;
  bool neg = false;
  if (j < s.size() && (s[j] == '-' || s[j] == '+')) {
    neg = (s[j] == '-');
    ++j;
  }
  size_t k = j;
  while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
  if (k == j) return false;
  out = 0;
  for (size_t t = j; t < k; ++t) out = out * 10 + (s[t] - '0');
  if (neg) out = -out;
  i = k;
  return true;
}

}  // namespace

GroupData GroupData::cyclic(Int r, Int a, Int b, Int c) {
  std::ostringstream os;
  os << "1/" << r << '(' << a << ',' << b << ',' << c << ')';
  return parse(os.str());
}

GroupData GroupData::parse(const std::string& text) {
  GroupData g;
  size_t i = 0;
  bool first = true;
  while (true) {
    skip_ws(text, i);
    if (i >= text.size()) {
      if (first) throw std::invalid_argument("empty group spec");
      break;
    }
    Int one, r, a, b, c;
    if (!read_int(text, i, one) || one != 1 || !read_char(text, i, '/') ||
        !read_int(text, i, r) || !read_char(text, i, '(') || !read_int(text, i, a) ||
        !read_char(text, i, ',') || !read_int(text, i, b) || !read_char(text, i, ',') ||
        !read_int(text, i, c) || !read_char(text, i, ')'))
      throw std::invalid_argument("malformed group spec, expected 1/r(a,b,c): " + text);
    if (r < 1) throw std::invalid_argument("cyclic order must be >= 1");
    a = mod(a, r);
    b = mod(b, r);
    c = mod(c, r);
    if ((a + b + c) % r != 0)
      throw std::invalid_argument("weights (" + std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ") do not sum to 0 mod " +
                                  std::to_string(r) + " (not in SL3)");
    g.factors_.push_back(r);
    g.weights_[0].push_back(a);
    g.weights_[1].push_back(b);
    g.weights_[2].push_back(c);
    first = false;
    skip_ws(text, i);
    if (i < text.size()) {
      if (text[i] == ';') {
        ++i;
        continue;
      }
      throw std::invalid_argument("trailing characters in group spec: " + text.substr(i));
    }
    break;
  }
  g.finalize();
  return g;
}

void GroupData::finalize() {
  order_ = 1;
  stride_.assign(factors_.size(), 1);
  for (size_t i = 0; i < factors_.size(); ++i) {
    stride_[i] = order_;
    order_ *= factors_[i];
  }
  std::vector<Int> tup(factors_.size());
  for (int axis = 0; axis < 3; ++axis) {
    for (size_t i = 0; i < factors_.size(); ++i) tup[i] = weights_[axis][i];
    wt_idx_[axis] = encode(tup);
  }
  // the action must be faithful so that N has index |G| over Z^3
  std::set<std::array<Int, 3>> seen;
  for (Int gidx = 0; gidx < order_; ++gidx) seen.insert(element_coords(gidx));
  if ((Int)seen.size() != order_)
    throw std::invalid_argument("weights do not define a faithful action of " + spec_string());
}

Int GroupData::encode(const std::vector<Int>& tuple) const {
  Int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx += mod(tuple[i], factors_[i]) * stride_[i];
  return idx;
}

std::vector<Int> GroupData::decode(Int idx) const {
  std::vector<Int> t(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    t[i] = (idx / stride_[i]) % factors_[i];
  }
  return t;
}

Int GroupData::chi_add(Int a, Int b) const {
  if (factors_.size() == 1) return (a + b) % order_;
  auto ta = decode(a), tb = decode(b);
  for (size_t i = 0; i < factors_.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors_[i];
  return encode(ta);
}

Int GroupData::chi_neg(Int a) const {
  if (factors_.size() == 1) return mod(-a, order_);
  auto t = decode(a);
  for (size_t i = 0; i < factors_.size(); ++i) t[i] = mod(-t[i], factors_[i]);
  return encode(t);
}

Int GroupData::chi_scale(Int k, Int a) const {
  auto t = decode(a);
  for (size_t i = 0; i < factors_.size(); ++i) t[i] = mod(k * t[i], factors_[i]);
  return encode(t);
}

Int GroupData::character_of(const Monomial& m) const {
  if (factors_.size() == 1) {
    Int r = factors_[0];
    return mod(m.e[0] * weights_[0][0] + m.e[1] * weights_[1][0] + m.e[2] * weights_[2][0], r);
  }
  std::vector<Int> t(factors_.size(), 0);
  for (size_t i = 0; i < factors_.size(); ++i)
    t[i] = mod(m.e[0] * weights_[0][i] + m.e[1] * weights_[1][i] + m.e[2] * weights_[2][i],
               factors_[i]);
  return encode(t);
}

std::array<Int, 3> GroupData::element_coords(Int g) const {
  auto t = decode(g);
  std::array<Int, 3> c{0, 0, 0};
  for (int axis = 0; axis < 3; ++axis) {
    Int acc = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      acc = mod(acc + t[i] * weights_[axis][i] * (order_ / factors_[i]), order_);
    c[axis] = acc;
  }
  return c;
}

LatticePoint GroupData::corner(int axis) const {
  LatticePoint p;
  p.den = order_;
  p.num = {0, 0, 0};
  p.num[axis] = order_;
  p.witness = 0;
  return p;
}

std::vector<LatticePoint> GroupData::junior_points() const {
  std::vector<LatticePoint> pts;
  for (int i = 0; i < 3; ++i) pts.push_back(corner(i));
  for (Int g = 1; g < order_; ++g) {
    auto c = element_coords(g);
    if (c[0] + c[1] + c[2] == order_) pts.push_back(LatticePoint{c, order_, g});
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

Int GroupData::lattice_witness(const std::array<Int, 3>& num) const {
  std::array<Int, 3> f{mod(num[0], order_), mod(num[1], order_), mod(num[2], order_)};
  for (Int g = 0; g < order_; ++g)
    if (element_coords(g) == f) return g;
  return -1;
}

bool GroupData::lattice_contains(const std::array<Int, 3>& num) const {
  return lattice_witness(num) >= 0;
}

std::string GroupData::spec_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ';';
    os << "1/" << factors_[i] << '(' << weights_[0][i] << ',' << weights_[1][i] << ','
       << weights_[2][i] << ')';
  }
  return os.str();
}

}  // namespace ghilb
