#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace so7 {

inline constexpr int kDegree = 7;

// A signed permutation of degree 7: a monomial 7x7 matrix with entries in
// {-1, 0, +1}, exactly one nonzero per row and column.  Column i carries
// (-1)^sign(i) in row image(i), so as a linear map  M e_i = (-1)^sign(i)
// e_image(i).
//
// Packed into 28 bits of a uint32: bits [3i, 3i+3) hold image(i) and bit
// 21+i holds sign(i).  The packing is order-isomorphic to the (image,
// signs) tuple, so uint32 comparison gives a total order and the raw code
// doubles as a hash key.  All 2^28-and-up values are free for sentinels.
class SignedPerm {
 public:
  // Identity matrix.
  SignedPerm() : code_(identity_code()) {}

  static SignedPerm identity() { return SignedPerm(); }

  // From images and sign bits: (perm, signs) with matrix M[perm[i]][i] =
  // (-1)^signs[i].  perm must be a permutation of 0..6.
  static SignedPerm from_parts(const std::array<int, kDegree>& perm,
                               const std::array<int, kDegree>& signs);

  // Plain permutation matrix (all signs +1).
  static SignedPerm from_perm(const std::array<int, kDegree>& perm);

  // Diagonal sign matrix diag((-1)^bit0, ..., (-1)^bit6); bits packed
  // little-endian into a 7-bit mask.
  static SignedPerm diag(unsigned sign_mask);

  // Negated identity, -I.
  static SignedPerm neg_identity() { return diag(0x7f); }

  // Parse a 7x7 matrix with entries in {-1, 0, 1}, row-major.  Throws
  // so7::Error unless it is monomial.
  static SignedPerm from_matrix(const std::array<std::array<int, kDegree>, kDegree>& m);

  int image(int i) const { return int((code_ >> (3 * i)) & 7u); }
  int sign_bit(int i) const { return int((code_ >> (21 + i)) & 1u); }
  int sign(int i) const { return sign_bit(i) ? -1 : 1; }

  std::array<int, kDegree> perm() const;
  unsigned sign_mask() const { return (code_ >> 21) & 0x7fu; }

  // Matrix product: (*this) * rhs applies rhs first.
  SignedPerm operator*(const SignedPerm& rhs) const;
  SignedPerm inverse() const;

  bool operator==(const SignedPerm& o) const { return code_ == o.code_; }
  auto operator<=>(const SignedPerm& o) const { return code_ <=> o.code_; }

  bool is_identity() const { return code_ == identity_code(); }

  // Trivial permutation part (a pure sign matrix).
  bool is_diagonal() const { return (code_ & 0x1fffffu) == identity_code(); }

  // Determinant, +1 or -1.
  int det() const;

  // Matrix trace: sum of (-1)^sign(i) over fixed points of the permutation.
  int trace() const;

  // Multiplicative order as a matrix (lcm over signed cycles; a cycle of
  // length l contributes l if its sign product is +1, else 2l).
  int order() const;

  std::array<std::array<int, kDegree>, kDegree> matrix() const;

  // Text form "p=[1,2,0,3,4,5,6];s=0100000" used by caches and tests.
  std::string str() const;
  static SignedPerm parse(const std::string& text);

  uint32_t raw() const { return code_; }
  static SignedPerm from_raw(uint32_t code) { return SignedPerm(code); }

 private:
  explicit SignedPerm(uint32_t code) : code_(code) {}

  static constexpr uint32_t identity_code() {
    uint32_t c = 0;
    for (int i = 0; i < kDegree; ++i) c |= uint32_t(i) << (3 * i);
    return c;
  }

  uint32_t code_;
};

// sgn(p) * p: the unique lift of a permutation into SO(7) by monomial
// matrices with constant sign; odd permutations get every entry negated.
// Multiplicative in p.
SignedPerm sign_twisted_lift(const std::array<int, kDegree>& perm);

// Parity of a plain permutation: +1 even, -1 odd.
int perm_parity(const std::array<int, kDegree>& perm);

}  // namespace so7
