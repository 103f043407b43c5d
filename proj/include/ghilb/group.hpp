#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghilb {

using Int = long long;

// Thrown when a computed structure violates one of the toolkit's invariants
// (bad fan, inconsistent marking, failed census, ...).
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when two independent computations of the same quantity disagree.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent triple of a monomial x^a y^b z^c.  Componentwise arithmetic.
struct Monomial {
  std::array<Int, 3> e{0, 0, 0};

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // lexicographic order on exponent triples
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

  bool divides(const Monomial& b) const {
    return e[0] <= b.e[0] && e[1] <= b.e[1] && e[2] <= b.e[2];
  }
  bool is_unit() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
};

std::string to_string(const Monomial& m);

// A point of the lattice N = Z^3 + sum_g Z*v_g, stored with the fixed
// denominator |G|.  Junior points have coordinate sum equal to den.
struct LatticePoint {
  std::array<Int, 3> num{0, 0, 0};
  Int den = 1;
  // index of a group element whose fractional coordinates equal this point
  // mod Z^3; 0 for integral points
  Int witness = 0;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.num < b.num; }
};

std::string to_string(const LatticePoint& p);

/**
 * A finite abelian subgroup of SL(3,C) given by diagonal weights.
 *
 * The group A = Z/n1 + ... + Z/nk acts on (x,y,z) through the three weight
 * vectors; characters are identified with elements of A and encoded as mixed
 * radix indices 0..order-1.  For a single cyclic factor the index of chi_a is
 * simply a, matching the 1/r(a,b,c) notation.
 */
class GroupData {
 public:
  // Parses "1/r(a,b,c)" or a ';'-separated list of such factors.
  // Throws std::invalid_argument on malformed input, weight sums not
  // divisible by r, or weights that do not act faithfully.
  static GroupData parse(const std::string& text);

  static GroupData cyclic(Int r, Int a, Int b, Int c);

  Int order() const { return order_; }
  int num_factors() const { return (int)factors_.size(); }
  const std::vector<Int>& factors() const { return factors_; }

  // --- character arithmetic (indices into 0..order-1) -------------------
  Int chi_add(Int a, Int b) const;
  Int chi_neg(Int a) const;
  Int chi_scale(Int k, Int a) const;  // k may be negative
  bool is_trivial(Int a) const { return a == 0; }

  // weight of coordinate axis (0=x,1=y,2=z) as a character index
  Int axis_weight(int axis) const { return wt_idx_[axis]; }

  // character by which the group acts on a monomial (negative exponents ok)
  Int character_of(const Monomial& m) const;

  std::vector<Int> decode(Int idx) const;
  Int encode(const std::vector<Int>& tuple) const;

  // fractional coordinates of element g, scaled by order()
  std::array<Int, 3> element_coords(Int g) const;

  // e1, e2, e3 as lattice points
  LatticePoint corner(int axis) const;

  // corners plus the age-one points of all nontrivial elements,
  // sorted lexicographically by coordinates
  std::vector<LatticePoint> junior_points() const;

  // true if v (with v.den == order()) lies in N
  bool lattice_contains(const std::array<Int, 3>& num) const;
  // witness element for a lattice vector, or -1 if not in N
  Int lattice_witness(const std::array<Int, 3>& num) const;

  // canonical "1/r(a,b,c)[;...]" form
  std::string spec_string() const;

 private:
  std::vector<Int> factors_;
  // weights_[axis][factor]
  std::array<std::vector<Int>, 3> weights_;
  std::array<Int, 3> wt_idx_{0, 0, 0};
  Int order_ = 1;
  std::vector<Int> stride_;

  void finalize();  // builds strides, checks SL3 and faithfulness
};

}  // namespace ghilb
