#include "so7/signed_perm.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

#include "so7/error.hpp"

namespace so7 {

SignedPerm SignedPerm::from_parts(const std::array<int, kDegree>& perm,
                                  const std::array<int, kDegree>& signs) {
  unsigned seen = 0;
  uint32_t c = 0;
  for (int i = 0; i < kDegree; ++i) {
    if (perm[i] < 0 || perm[i] >= kDegree) throw Error("image out of range");
    seen |= 1u << perm[i];
    c |= uint32_t(perm[i]) << (3 * i);
    if (signs[i] & 1) c |= 1u << (21 + i);
  }
  if (seen != 0x7fu) throw Error("not a permutation of 0..6");
  return SignedPerm(c);
}

SignedPerm SignedPerm::from_perm(const std::array<int, kDegree>& perm) {
  return from_parts(perm, {0, 0, 0, 0, 0, 0, 0});
}

SignedPerm SignedPerm::diag(unsigned sign_mask) {
  return SignedPerm(identity_code() | ((sign_mask & 0x7fu) << 21));
}

SignedPerm SignedPerm::from_matrix(
    const std::array<std::array<int, kDegree>, kDegree>& m) {
  std::array<int, kDegree> perm{}, signs{};
  for (int col = 0; col < kDegree; ++col) {
    int hits = 0;
    for (int row = 0; row < kDegree; ++row) {
      int v = m[row][col];
      if (v == 0) continue;
      if (v != 1 && v != -1) throw Error("matrix entry not in {-1,0,1}");
      perm[col] = row;
      signs[col] = v < 0;
      ++hits;
    }
    if (hits != 1) throw Error("matrix column is not monomial");
  }
  // from_parts rejects repeated rows, which also catches multi-entry rows.
  return from_parts(perm, signs);
}

std::array<int, kDegree> SignedPerm::perm() const {
  std::array<int, kDegree> p;
  for (int i = 0; i < kDegree; ++i) p[i] = image(i);
  return p;
}

SignedPerm SignedPerm::operator*(const SignedPerm& rhs) const {
  // (a*b) e_i = a ((-1)^{b.sign(i)} e_{b.image(i)}), so the composite sends
  // i to a.image(b.image(i)) with sign b.sign(i) ^ a.sign(b.image(i)).
  uint32_t c = 0;
  for (int i = 0; i < kDegree; ++i) {
    int mid = rhs.image(i);
    c |= uint32_t(image(mid)) << (3 * i);
    c |= uint32_t(rhs.sign_bit(i) ^ sign_bit(mid)) << (21 + i);
  }
  return SignedPerm(c);
}

SignedPerm SignedPerm::inverse() const {
  uint32_t c = 0;
  for (int i = 0; i < kDegree; ++i) {
    int j = image(i);
    c |= uint32_t(i) << (3 * j);
    c |= uint32_t(sign_bit(i)) << (21 + j);
  }
  return SignedPerm(c);
}

int SignedPerm::det() const {
  int p = perm_parity(perm());
  int negs = __builtin_popcount(sign_mask());
  return (negs & 1) ? -p : p;
}

int SignedPerm::trace() const {
  int t = 0;
  for (int i = 0; i < kDegree; ++i)
    if (image(i) == i) t += sign(i);
  return t;
}

int SignedPerm::order() const {
  unsigned done = 0;
  long ord = 1;
  for (int i = 0; i < kDegree; ++i) {
    if (done & (1u << i)) continue;
    int len = 0, s = 0, j = i;
    do {
      done |= 1u << j;
      s ^= sign_bit(j);
      j = image(j);
      ++len;
    } while (j != i);
    ord = std::lcm(ord, long(s ? 2 * len : len));
  }
  return int(ord);
}

std::array<std::array<int, kDegree>, kDegree> SignedPerm::matrix() const {
  std::array<std::array<int, kDegree>, kDegree> m{};
  for (int i = 0; i < kDegree; ++i) m[image(i)][i] = sign(i);
  return m;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "p=[";
  for (int i = 0; i < kDegree; ++i) os << (i ? "," : "") << image(i);
  os << "];s=";
  for (int i = 0; i < kDegree; ++i) os << sign_bit(i);
  return os.str();
}

SignedPerm SignedPerm::parse(const std::string& text) {
  std::array<int, kDegree> perm{}, signs{};
  size_t pos = 0;
  auto expect = [&](const char* lit) {
    size_t n = std::string(lit).size();
    if (text.compare(pos, n, lit) != 0) throw Error("bad element text: " + text);
    pos += n;
  };
  expect("p=[");
  for (int i = 0; i < kDegree; ++i) {
    if (i) expect(",");
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '6')
      throw Error("bad element text: " + text);
    perm[i] = text[pos++] - '0';
  }
  expect("];s=");
  for (int i = 0; i < kDegree; ++i) {
    if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1'))
      throw Error("bad element text: " + text);
    signs[i] = text[pos++] - '0';
  }
  if (pos != text.size()) throw Error("bad element text: " + text);
  return from_parts(perm, signs);
}

int perm_parity(const std::array<int, kDegree>& perm) {
  unsigned done = 0;
  int transpositions = 0;
  for (int i = 0; i < kDegree; ++i) {
    if (done & (1u << i)) continue;
    int len = 0, j = i;
    do {
      done |= 1u << j;
      j = perm[j];
      ++len;
    } while (j != i);
    transpositions += len - 1;
  }
  return (transpositions & 1) ? -1 : 1;
}

SignedPerm sign_twisted_lift(const std::array<int, kDegree>& perm) {
  unsigned mask = perm_parity(perm) < 0 ? 0x7fu : 0u;
  return SignedPerm::from_perm(perm) * SignedPerm::diag(mask);
}

}  // namespace so7
