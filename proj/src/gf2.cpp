#include "so7/gf2.hpp"

#include <algorithm>

#include "so7/error.hpp"

namespace so7 {

Gf2Vec Gf2Vec::parse(const std::string& s) {
  if (s.size() != kDegree) throw Error("gf2 vector needs 7 bits: " + s);
  unsigned b = 0;
  for (int j = 0; j < kDegree; ++j) {
    if (s[j] == '1') b |= 1u << j;
    else if (s[j] != '0') throw Error("gf2 vector needs 7 bits: " + s);
  }
  return Gf2Vec(b);
}

std::string Gf2Vec::str() const {
  std::string s(kDegree, '0');
  for (int j = 0; j < kDegree; ++j)
    if (get(j)) s[j] = '1';
  return s;
}

Gf2Vec Gf2Vec::permuted(const std::array<int, kDegree>& p) const {
  unsigned b = 0;
  for (int i = 0; i < kDegree; ++i)
    if (get(i)) b |= 1u << p[i];
  return Gf2Vec(b);
}

Gf2Code Gf2Code::span(const std::vector<Gf2Vec>& gens) {
  // Gaussian elimination with pivot = lowest set bit.
  std::vector<unsigned> rows;
  for (Gf2Vec g : gens) {
    unsigned v = g.bits;
    for (unsigned r : rows) {
      unsigned pivot = r & -r;
      if (v & pivot) v ^= r;
    }
    if (v) rows.push_back(v);
  }
  // Back-substitute to full RREF: clear every pivot from the other rows.
  for (size_t a = 0; a < rows.size(); ++a) {
    unsigned pivot = rows[a] & -rows[a];
    for (size_t b = 0; b < rows.size(); ++b)
      if (b != a && (rows[b] & pivot)) rows[b] ^= rows[a];
  }
  std::sort(rows.begin(), rows.end(),
            [](unsigned x, unsigned y) { return (x & -x) < (y & -y); });
  Gf2Code c;
  for (unsigned r : rows) c.basis_.push_back(Gf2Vec(r));
  return c;
}

Gf2Vec Gf2Code::reduce(Gf2Vec v) const {
  unsigned b = v.bits;
  for (Gf2Vec r : basis_) {
    unsigned pivot = r.bits & -r.bits;
    if (b & pivot) b ^= r.bits;
  }
  return Gf2Vec(b);
}

std::vector<Gf2Vec> Gf2Code::words() const {
  std::vector<Gf2Vec> out;
  out.reserve(size());
  for (unsigned m = 0; m < size(); ++m) {
    unsigned v = 0;
    for (int k = 0; k < dim(); ++k)
      if (m & (1u << k)) v ^= basis_[k].bits;
    out.push_back(Gf2Vec(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Gf2Code Gf2Code::annihilator() const {
  std::vector<Gf2Vec> gens;
  for (unsigned u = 1; u < (1u << kDegree); ++u) {
    Gf2Vec cand(u);
    bool ok = true;
    for (Gf2Vec r : basis_)
      if (cand.dot(r)) { ok = false; break; }
    if (ok) gens.push_back(cand);
  }
  return span(gens);
}

Gf2Code cyclic_code(Gf2Vec g) {
  std::array<int, kDegree> shift;
  for (int i = 0; i < kDegree; ++i) shift[i] = (i + 1) % kDegree;
  std::vector<Gf2Vec> gens;
  Gf2Vec v = g;
  for (int k = 0; k < kDegree; ++k) {
    gens.push_back(v);
    v = v.permuted(shift);
  }
  return Gf2Code::span(gens);
}

const Gf2Code& code_a8() {
  static const Gf2Code code = [] {
    std::vector<Gf2Vec> gens;
    for (unsigned u : {1u, 2u, 4u}) {
      unsigned bits = 0;
      for (int i = 0; i < kDegree; ++i)
        if (__builtin_popcount(u & unsigned(i + 1)) & 1) bits |= 1u << i;
      gens.push_back(Gf2Vec(bits));
    }
    return Gf2Code::span(gens);
  }();
  return code;
}

const Gf2Code& code_a64() {
  static const Gf2Code code = [] {
    std::vector<Gf2Vec> gens;
    for (int i = 0; i + 1 < kDegree; ++i) gens.push_back(Gf2Vec(3u << i));
    return Gf2Code::span(gens);
  }();
  return code;
}

std::vector<SignedPerm> diag_group(const Gf2Code& code) {
  std::vector<SignedPerm> out;
  out.reserve(code.size());
  for (Gf2Vec w : code.words()) out.push_back(SignedPerm::diag(w.bits));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace so7
