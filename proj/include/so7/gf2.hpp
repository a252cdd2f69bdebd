#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "so7/signed_perm.hpp"

namespace so7 {

// A vector in GF(2)^7, bit j = coordinate j.  String form is 7 chars of
// '0'/'1' with character j giving coordinate j, e.g. "1010101" = e0+e2+e4+e6.
struct Gf2Vec {
  unsigned bits = 0;

  Gf2Vec() = default;
  explicit Gf2Vec(unsigned b) : bits(b & 0x7fu) {}
  static Gf2Vec parse(const std::string& s);

  int get(int j) const { return int((bits >> j) & 1u); }
  int weight() const { return __builtin_popcount(bits); }
  Gf2Vec operator+(Gf2Vec o) const { return Gf2Vec(bits ^ o.bits); }
  int dot(Gf2Vec o) const { return __builtin_popcount(bits & o.bits) & 1; }
  bool operator==(const Gf2Vec&) const = default;
  auto operator<=>(const Gf2Vec&) const = default;

  std::string str() const;

  // Coordinate permutation: (p.v)_j = v_{p^-1(j)}, i.e. coordinate i of v
  // lands in coordinate p(i).  Matches conjugation of diagonal sign
  // matrices: g diag(v) g^-1 = diag(perm(g).v) for monomial g.
  Gf2Vec permuted(const std::array<int, kDegree>& p) const;
};

// A linear code (subspace of GF(2)^7) held as a canonical reduced basis:
// row-reduced echelon form with pivots at each row's lowest set bit,
// rows sorted by pivot.  Value-equal codes compare equal.
class Gf2Code {
 public:
  Gf2Code() = default;
  static Gf2Code span(const std::vector<Gf2Vec>& gens);

  int dim() const { return int(basis_.size()); }
  size_t size() const { return size_t(1) << dim(); }
  const std::vector<Gf2Vec>& basis() const { return basis_; }

  bool contains(Gf2Vec v) const { return reduce(v).bits == 0; }
  // Canonical coset representative: v minus its projection onto the code.
  Gf2Vec reduce(Gf2Vec v) const;

  // All 2^dim codewords, ascending by bit value.
  std::vector<Gf2Vec> words() const;

  // Dual code {u : u.v = 0 for all v in the code}.
  Gf2Code annihilator() const;

  bool operator==(const Gf2Code&) const = default;

 private:
  std::vector<Gf2Vec> basis_;  // RREF, ascending pivot
};

// Span of all cyclic shifts (i -> i+1 mod 7) of g.
Gf2Code cyclic_code(Gf2Vec g);

// The dimension-3 simplex-type code used for case 2: coordinates indexed in
// binary order (coordinate i <-> the nonzero triple i+1), codewords are the
// complements-of-hyperplane indicators; basis w_u[i] = u . (i+1) for
// u = 1, 2, 4.  All nonzero words have weight 4.
const Gf2Code& code_a8();

// The dimension-6 even-weight code for case 3.
const Gf2Code& code_a64();

// Diagonal sign-matrix group of a code: {diag(v) : v in code} as elements.
std::vector<SignedPerm> diag_group(const Gf2Code& code);

}  // namespace so7
