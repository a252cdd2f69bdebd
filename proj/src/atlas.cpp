#include "so7/atlas.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>

#include "so7/clifford.hpp"
#include "so7/error.hpp"
#include "so7/subgroups.hpp"

namespace so7 {

namespace {

Table1Claim claim(size_t nfc, size_t fc, size_t total) {
  return Table1Claim{nfc, fc, total};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> base = {
      {"case1-psl27", "case1-psl27", 1, 168, false, std::nullopt},
      {"case2-z7", "case2-z7", 2, 56, false, claim(7, 1, 8)},
      {"case2-f21", "case2-f21", 2, 168, false, claim(5, 3, 8)},
      {"case2-psl32-split", "case2-psl32-split", 2, 1344, false,
       claim(6, 5, 11)},
      {"case2-psl32-nonsplit", "case2-psl32-nonsplit", 2, 1344, false,
       claim(6, 5, 11)},
      {"case3-z7", "case3-z7", 3, 448, false, claim(7, 9, 16)},
      {"case3-d14", "case3-d14", 3, 896, false, claim(5, 18, 23)},
      {"case3-f21", "case3-f21", 3, 1344, false, claim(5, 27, 32)},
      {"case3-f42", "case3-f42", 3, 2688, false, claim(10, 54, 64)},
      {"case3-psl32", "case3-psl32", 3, 10752, false, claim(6, 45, 51)},
      {"case3-a7", "case3-a7", 3, 161280, false, claim(9, 63, 72)},
      {"case3-s7", "case3-s7", 3, 322560, false, claim(15, 99, 114)},
  };
  std::vector<CatalogEntry> all = base;
  for (const CatalogEntry& e : base) {
    CatalogEntry n = e;
    n.id = e.id + "+neg";
    n.base_id = e.id;
    n.order = 2 * e.order;
    n.neg = true;
    n.table1 = std::nullopt;
    all.push_back(n);
  }
  return all;
}

// GF(8) as bit masks 1..7 over x^3 + x + 1; coordinate i of R^7 carries
// the nonzero field element i+1.
int gf8_mul_x(int v) {
  v <<= 1;
  if (v & 8) v ^= 0b1011;
  return v;
}

int gf8_mul(int a, int b) {
  int acc = 0;
  for (int k = 0; k < 3; ++k) {
    if (b & (1 << k)) acc ^= a;
    a = gf8_mul_x(a);
  }
  return acc;
}

std::array<int, kDegree> perm_of_value_map(
    const std::array<int, 8>& value_map) {
  std::array<int, kDegree> p{};
  for (int i = 0; i < kDegree; ++i) p[i] = value_map[i + 1] - 1;
  return p;
}

SignedPerm first_gl32_involution() {
  for (const SignedPerm& e : gl32_perm_group().elements())
    if (e.order() == 2) return e;
  throw InternalError("no involution in the GL(3,2) coordinate group");
}

std::vector<SignedPerm> diag_basis(const Gf2Code& code) {
  std::vector<SignedPerm> out;
  for (const Gf2Vec& b : code.basis()) out.push_back(SignedPerm::diag(b.bits));
  return out;
}

Group build_named(const std::string& id);

Group memoized(const std::string& id) {
  static std::recursive_mutex mu;  // +neg and search recipes re-enter
  static std::map<std::string, Group> built;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = built.find(id);
  if (it != built.end()) return it->second;
  Group g = build_named(id);
  built.emplace(id, g);
  return g;
}

Group from_recipe(const CatalogEntry& entry,
                  std::vector<SignedPerm> generators) {
  Group g = Group::generate(std::move(generators));
  if (g.order() != entry.order)
    throw InternalError("recipe for " + entry.id + " closed to order " +
                        std::to_string(g.order()) + ", catalog says " +
                        std::to_string(entry.order));
  return g;
}

Group build_nonsplit_1344() {
  Group a8 = Group::generate(diag_basis(code_a8()));
  for (const Group& g : search_order_1344())
    if (!complement_search(g, a8, nondiagonal_generators(g))) return g;
  throw InternalError("no non-split group of order 1344 in the search");
}

Group build_named(const std::string& id) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) throw Error("unknown group id: " + id);
  if (entry->neg) return adjoin_neg_identity(memoized(entry->base_id));
  if (id == "case1-psl27") return search_case1_psl27();
  if (id == "case2-psl32-nonsplit") return build_nonsplit_1344();

  std::vector<SignedPerm> gens =
      diag_basis(entry->case_no == 2 ? code_a8() : code_a64());
  if (id == "case2-z7") {
    gens.push_back(singer());
  } else if (id == "case2-f21") {
    gens.push_back(singer());
    gens.push_back(frobenius());
  } else if (id == "case2-psl32-split") {
    gens.push_back(singer());
    gens.push_back(first_gl32_involution());
  } else if (id == "case3-z7") {
    gens.push_back(alpha());
  } else if (id == "case3-d14") {
    gens.push_back(alpha());
    gens.push_back(neg_perm());
  } else if (id == "case3-f21") {
    gens.push_back(alpha());
    gens.push_back(f21_beta());
  } else if (id == "case3-f42") {
    gens.push_back(alpha());
    gens.push_back(mul3_perm());
  } else if (id == "case3-psl32") {
    gens.push_back(singer());
    gens.push_back(first_gl32_involution());
  } else if (id == "case3-a7") {
    gens.push_back(sign_twisted_lift({1, 2, 0, 3, 4, 5, 6}));
    gens.push_back(alpha());
  } else if (id == "case3-s7") {
    gens.push_back(sign_twisted_lift({1, 0, 2, 3, 4, 5, 6}));
    gens.push_back(alpha());
  }
  return from_recipe(*entry, std::move(gens));
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

SignedPerm alpha() {
  return sign_twisted_lift({1, 2, 3, 4, 5, 6, 0});
}

SignedPerm f21_beta() {
  std::array<int, kDegree> p{};
  for (int i = 0; i < kDegree; ++i) p[i] = 2 * i % kDegree;
  return sign_twisted_lift(p);
}

SignedPerm singer() {
  std::array<int, 8> value_map{};
  for (int v = 1; v <= 7; ++v) value_map[v] = gf8_mul_x(v);
  return sign_twisted_lift(perm_of_value_map(value_map));
}

SignedPerm frobenius() {
  std::array<int, 8> value_map{};
  for (int v = 1; v <= 7; ++v) value_map[v] = gf8_mul(v, v);
  return sign_twisted_lift(perm_of_value_map(value_map));
}

SignedPerm neg_perm() {
  std::array<int, kDegree> p{};
  for (int i = 0; i < kDegree; ++i) p[i] = (kDegree - i) % kDegree;
  return sign_twisted_lift(p);
}

SignedPerm mul3_perm() {
  std::array<int, kDegree> p{};
  for (int i = 0; i < kDegree; ++i) p[i] = 3 * i % kDegree;
  return sign_twisted_lift(p);
}

Group gl32_perm_group() {
  static const Group group = [] {
    std::vector<SignedPerm> elements;
    for (int c0 = 1; c0 < 8; ++c0)
      for (int c1 = 1; c1 < 8; ++c1)
        for (int c2 = 1; c2 < 8; ++c2) {
          std::array<int, 8> image{};
          std::array<bool, 8> seen{};
          bool invertible = true;
          for (int v = 1; v <= 7 && invertible; ++v) {
            int w = 0;
            if (v & 1) w ^= c0;
            if (v & 2) w ^= c1;
            if (v & 4) w ^= c2;
            image[v] = w;
            if (w == 0 || seen[w]) invertible = false;
            seen[w] = true;
          }
          if (invertible)
            elements.push_back(SignedPerm::from_perm(perm_of_value_map(image)));
        }
    std::sort(elements.begin(), elements.end());
    std::vector<SignedPerm> gens = greedy_generators(elements);
    return Group::from_elements(std::move(elements), std::move(gens));
  }();
  return group;
}

Group s7_perm_group() {
  static const Group group = [] {
    std::vector<SignedPerm> elements;
    std::array<int, kDegree> p = {0, 1, 2, 3, 4, 5, 6};
    do {
      elements.push_back(SignedPerm::from_perm(p));
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(elements.begin(), elements.end());
    std::vector<SignedPerm> gens = greedy_generators(elements);
    return Group::from_elements(std::move(elements), std::move(gens));
  }();
  return group;
}

Group normalizer_of_a8() {
  return memoized("case3-psl32");
}

Gf2Code code_for(const std::string& id) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) throw Error("unknown group id: " + id);
  std::vector<Gf2Vec> vecs;
  if (entry->case_no == 2)
    vecs = code_a8().basis();
  else if (entry->case_no == 3)
    vecs = code_a64().basis();
  if (entry->neg) vecs.push_back(Gf2Vec{0x7f});
  return Gf2Code::span(vecs);
}

Group named_group(const std::string& id) {
  return memoized(id);
}

std::vector<SignedPerm> nondiagonal_generators(const Group& g) {
  std::vector<SignedPerm> out;
  for (const SignedPerm& e : effective_generators(g))
    if (!e.is_diagonal()) out.push_back(e);
  return out;
}

std::vector<InvariantCode> enumerate_invariant_codes() {
  // Multiply a subset of the irreducible factors of x^7 - 1 over GF(2),
  // fold x^7 back to 1, and span the cyclic shifts of the product.
  const std::array<int, 3> factors = {0b11, 0b1011, 0b1101};
  std::vector<InvariantCode> out;
  for (int subset = 0; subset < 8; ++subset) {
    int poly = 1;
    for (int f = 0; f < 3; ++f)
      if (subset & (1 << f)) {
        int prod = 0;
        for (int k = 0; poly >> k; ++k)
          if (poly & (1 << k)) prod ^= factors[f] << k;
        poly = prod;
      }
    unsigned word = 0;
    for (int k = 0; k < 14; ++k)
      if (poly & (1 << k)) word ^= 1u << (k % kDegree);
    Gf2Code code = cyclic_code(Gf2Vec{word});
    if (code.dim() == 0) continue;

    bool all_even = true;
    for (const Gf2Vec& w : code.words())
      if (w.weight() % 2 != 0) all_even = false;
    if (!all_even) continue;

    std::array<int, kDegree> shift{};
    for (int i = 0; i < kDegree; ++i) shift[i] = (i + 1) % kDegree;
    bool fpf = true;
    for (const Gf2Vec& w : code.words())
      if (w.bits != 0 && w.permuted(shift) == w) fpf = false;
    out.push_back(InvariantCode{code, fpf});
  }
  std::sort(out.begin(), out.end(),
            [](const InvariantCode& a, const InvariantCode& b) {
              if (a.code.dim() != b.code.dim())
                return a.code.dim() < b.code.dim();
              return a.code.basis().front().bits < b.code.basis().front().bits;
            });
  return out;
}

std::vector<Group> search_order_1344() {
  Group n = normalizer_of_a8();
  std::vector<SignedPerm> seed_gens = diag_basis(code_a8());
  seed_gens.push_back(singer());
  Group seed = Group::generate(std::move(seed_gens));

  std::vector<uint32_t> a8_masks;
  for (const Gf2Vec& w : code_a8().words()) a8_masks.push_back(w.bits);
  std::sort(a8_masks.begin(), a8_masks.end());

  std::vector<Group> found;
  std::vector<GroupFingerprint> prints;
  for (const Group& h : subgroups_above(n, seed)) {
    if (h.order() != 1344) continue;
    std::vector<uint32_t> diag_masks;
    for (const SignedPerm& e : h.elements())
      if (e.is_diagonal()) diag_masks.push_back(e.sign_mask());
    std::sort(diag_masks.begin(), diag_masks.end());
    if (diag_masks != a8_masks) continue;
    GroupFingerprint fp = fingerprint(h);
    if (std::find(prints.begin(), prints.end(), fp) != prints.end()) continue;
    prints.push_back(fp);
    found.push_back(h);
  }
  return found;
}

Group search_case1_psl27() {
  const SignedPerm q1 = singer();
  const SignedPerm q2 = first_gl32_involution();
  for (const Gf2Vec& w1 : code_a64().words())
    for (const Gf2Vec& w2 : code_a64().words()) {
      std::array<SignedPerm, 2> gens = {SignedPerm::diag(w1.bits) * q1,
                                        SignedPerm::diag(w2.bits) * q2};
      std::vector<SignedPerm> closed = closure_bounded(gens, 168);
      if (closed.size() != 168) continue;
      Group c = Group::from_elements(std::move(closed), {gens[0], gens[1]});
      if (!(char_norm(c) == Rational{1, 1})) continue;
      if (!is_simple(c)) continue;
      return c;
    }
  throw Error("no simple norm-one complement of the even diagonals exists");
}

bool exclude_nonsplit_64_14() {
  Group sylow = Group::generate({alpha()});
  Group a64 = Group::generate(diag_basis(code_a64()));
  for (const Group& h : subgroups_above(s7_perm_group(), sylow)) {
    if (h.order() != 14 && h.order() != 42) continue;
    std::vector<SignedPerm> lifts;
    for (const SignedPerm& e : effective_generators(h))
      lifts.push_back(sign_twisted_lift(e.perm()));
    std::vector<SignedPerm> gens = diag_basis(code_a64());
    gens.insert(gens.end(), lifts.begin(), lifts.end());
    Group preimage = Group::generate(std::move(gens));
    if (preimage.order() != 64 * h.order())
      throw InternalError("preimage order is off for a quotient of order " +
                          std::to_string(h.order()));
    if (!complement_search(preimage, a64, lifts)) return false;
  }
  return true;
}

}  // namespace so7
