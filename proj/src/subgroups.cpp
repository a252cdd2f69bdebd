#include "so7/subgroups.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <map>
#include <set>

#include "so7/classes.hpp"
#include "so7/error.hpp"
#include "so7/flat_hash.hpp"
#include "so7/quotient.hpp"

namespace so7 {

namespace {

std::vector<uint32_t> element_key(const Group& h) {
  std::vector<uint32_t> k;
  k.reserve(h.order());
  for (const SignedPerm& e : h.elements()) k.push_back(e.raw());
  return k;
}

}  // namespace

Group normal_closure(const Group& g, std::vector<SignedPerm> seed) {
  std::vector<SignedPerm> gens;
  for (const SignedPerm& s : seed)
    if (!s.is_identity() &&
        std::find(gens.begin(), gens.end(), s) == gens.end())
      gens.push_back(s);
  std::vector<std::pair<SignedPerm, SignedPerm>> conj;
  for (const SignedPerm& x : effective_generators(g))
    conj.emplace_back(x, x.inverse());

  Group h = gens.empty() ? Group::trivial() : Group::generate(gens);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t fixed = gens.size();
    for (size_t i = 0; i < fixed; ++i)
      for (const auto& [x, xinv] : conj) {
        SignedPerm c = x * gens[i] * xinv;
        if (!h.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    if (grew) h = Group::generate(gens);
  }
  return h;
}

Group derived_subgroup(const Group& g) {
  std::vector<SignedPerm> gens = effective_generators(g);
  std::vector<SignedPerm> comms;
  for (const SignedPerm& x : gens)
    for (const SignedPerm& y : gens)
      comms.push_back(x.inverse() * y.inverse() * x * y);
  return normal_closure(g, std::move(comms));
}

Group center(const Group& g) {
  std::vector<SignedPerm> gens = effective_generators(g);
  std::vector<SignedPerm> zs;
  for (const SignedPerm& z : g.elements()) {
    bool central = true;
    for (const SignedPerm& x : gens)
      if (!(z * x == x * z)) {
        central = false;
        break;
      }
    if (central) zs.push_back(z);
  }
  return Group::from_elements(std::move(zs), {});
}

Group centralizer(const Group& g, SignedPerm x) {
  if (!g.contains(x)) throw Error("centralizer of an element outside the group");
  std::vector<SignedPerm> zs;
  for (const SignedPerm& z : g.elements())
    if (z * x == x * z) zs.push_back(z);
  return Group::from_elements(std::move(zs), {});
}

bool is_simple(const Group& g) {
  if (g.order() == 1) return false;
  const ClassPartition& cp = g.classes();
  for (const auto& cls : cp.classes) {
    if (cls[0].is_identity() && cls.size() == 1) continue;
    if (normal_closure(g, {cls[0]}).order() != g.order()) return false;
  }
  return true;
}

GroupFingerprint fingerprint(const Group& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  fp.class_sizes = g.classes().sizes_sorted();
  std::map<int, size_t> hist;
  for (const SignedPerm& e : g.elements()) ++hist[e.order()];
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.derived_order = derived_subgroup(g).order();
  fp.center_order = center(g).order();
  return fp;
}

std::vector<Group> subgroups_above(const Group& ambient, const Group& seed) {
  if (!ambient.contains_group(seed))
    throw Error("seed is not a subgroup of the ambient group");
  std::set<std::vector<uint32_t>> seen;
  std::vector<Group> out, todo;
  seen.insert(element_key(seed));
  out.push_back(seed);
  todo.push_back(seed);

  while (!todo.empty()) {
    Group h = std::move(todo.back());
    todo.pop_back();
    if (h.order() == ambient.order()) continue;
    std::vector<SignedPerm> hgens = effective_generators(h);
    FlatSet tried(ambient.order());
    for (const SignedPerm& e : h.elements()) tried.insert(e.raw());
    for (const SignedPerm& g : ambient.elements()) {
      if (tried.contains(g.raw())) continue;
      for (const SignedPerm& e : h.elements()) tried.insert((e * g).raw());
      std::vector<SignedPerm> kgens = hgens;
      kgens.push_back(g);
      Group k = Group::generate(std::move(kgens));
      if (seen.insert(element_key(k)).second) {
        out.push_back(k);
        todo.push_back(k);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

bool are_conjugate(const Group& ambient, const Group& h1, const Group& h2) {
  if (h1.order() != h2.order()) return false;
  if (h1.same_elements(h2)) return true;
  std::vector<SignedPerm> gens = effective_generators(h1);
  for (const SignedPerm& t : ambient.elements()) {
    SignedPerm tinv = t.inverse();
    bool all = true;
    for (const SignedPerm& x : gens)
      if (!h2.contains(t * x * tinv)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

std::vector<Group> merge_conjugate_subgroups(const Group& ambient,
                                             std::vector<Group> subs) {
  std::vector<Group> reps;
  for (const Group& h : subs) {
    bool dup = false;
    for (const Group& r : reps)
      if (are_conjugate(ambient, r, h)) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(h);
  }
  return reps;
}

namespace {

// Shared setup for the complement scan: the chosen quotient generator
// representatives q_1..q_k.
std::vector<SignedPerm> choose_quotient_reps(
    const Group& g, const Group& a, std::span<const SignedPerm> hints) {
  if (!hints.empty()) {
    std::vector<SignedPerm> gens = effective_generators(a);
    for (const SignedPerm& h : hints) {
      if (!g.contains(h)) throw Error("hint element is outside the group");
      gens.push_back(h);
    }
    if (closure_elements(gens).size() != g.order())
      throw Error("hint elements do not generate the group over the subgroup");
    return {hints.begin(), hints.end()};
  }

  QuotientGroup q(g, a);
  const size_t m = q.order();
  std::vector<char> inset(m);
  auto label_closure = [&](std::span<const uint16_t> gens) {
    std::fill(inset.begin(), inset.end(), 0);
    std::vector<uint16_t> stack{0};
    inset[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      uint16_t x = stack.back();
      stack.pop_back();
      for (uint16_t gl : gens) {
        uint16_t y = q.mul(x, gl);
        if (!inset[y]) {
          inset[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count;
  };

  std::vector<int> label_order(m);
  for (size_t l = 0; l < m; ++l) {
    int ord = 1;
    uint16_t x = uint16_t(l);
    while (x != 0) {
      x = q.mul(x, uint16_t(l));
      ++ord;
    }
    label_order[l] = ord;
  }
  std::vector<uint16_t> by_order(m);
  for (size_t l = 0; l < m; ++l) by_order[l] = uint16_t(l);
  std::sort(by_order.begin(), by_order.end(), [&](uint16_t x, uint16_t y) {
    if (label_order[x] != label_order[y])
      return label_order[x] > label_order[y];
    return x < y;
  });

  for (uint16_t c1 : by_order) {
    std::array<uint16_t, 2> pair{c1, 0};
    if (label_closure({pair.data(), 1}) == m) return {q.rep(c1)};
  }
  if (m <= 168) {
    for (uint16_t c1 : by_order)
      for (uint16_t c2 = 1; c2 < m; ++c2) {
        std::array<uint16_t, 2> pair{c1, c2};
        if (label_closure(pair) == m) return {q.rep(c1), q.rep(c2)};
      }
  }

  // Greedy fallback: adjoin the first label outside the span so far.
  std::vector<uint16_t> chosen;
  std::fill(inset.begin(), inset.end(), 0);
  inset[0] = 1;
  for (uint16_t l = 1; l < m; ++l) {
    if (inset[l]) continue;
    chosen.push_back(l);
    if (chosen.size() > 3)
      throw Error("quotient needs more than 3 greedy generators");
    if (label_closure(chosen) == m) break;
  }
  std::vector<SignedPerm> reps;
  for (uint16_t l : chosen) reps.push_back(q.rep(l));
  return reps;
}

struct ScanSetup {
  size_t m = 0;
  size_t total = 0;
  std::vector<SignedPerm> qreps;
};

// Test one lift candidate; on success return the complement.
std::optional<Group> try_candidate(const Group& a, const ScanSetup& s,
                                   size_t idx) {
  const auto& avec = a.elements();
  std::vector<SignedPerm> cand(s.qreps.size());
  size_t rem = idx;
  for (size_t j = cand.size(); j-- > 0;) {
    cand[j] = avec[rem % avec.size()] * s.qreps[j];
    rem /= avec.size();
  }
  std::vector<SignedPerm> elems = closure_bounded(cand, s.m);
  if (elems.empty()) return std::nullopt;
  // The candidate cosets generate g/a, so a closure that stayed within
  // [g:a] elements must meet every coset exactly once.
  assert(elems.size() == s.m);
  size_t in_a = 0;
  for (const SignedPerm& e : elems)
    if (a.contains(e)) ++in_a;
  if (in_a != 1)
    throw InternalError("complement candidate meets the subgroup twice");
  return Group::from_elements(std::move(elems), std::move(cand));
}

std::optional<ScanSetup> scan_setup(const Group& g, const Group& a,
                                    std::span<const SignedPerm> hints) {
  if (!is_normal(g, a)) throw Error("complement search needs a normal subgroup");
  if (g.order() == a.order()) return std::nullopt;
  ScanSetup s;
  s.qreps = choose_quotient_reps(g, a, hints);
  s.m = g.order() / a.order();
  s.total = 1;
  for (size_t i = 0; i < s.qreps.size(); ++i) s.total *= a.order();
  return s;
}

std::optional<Group> scan_serial(const Group& a, const ScanSetup& s) {
  for (size_t idx = 0; idx < s.total; ++idx)
    if (auto c = try_candidate(a, s, idx)) return c;
  return std::nullopt;
}

std::optional<Group> scan_parallel(const Group& a, const ScanSetup& s) {
  constexpr size_t kBlock = 1024;
  const size_t blocks = (s.total + kBlock - 1) / kBlock;
  std::atomic<size_t> best{SIZE_MAX};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long b = 0; b < long(blocks); ++b) {
    size_t start = size_t(b) * kBlock;
    if (start >= best.load(std::memory_order_relaxed)) continue;
    size_t stop = std::min(start + kBlock, s.total);
    for (size_t idx = start; idx < stop; ++idx) {
      if (idx >= best.load(std::memory_order_relaxed)) break;
      if (try_candidate(a, s, idx)) {
        size_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur &&
               !best.compare_exchange_weak(cur, idx,
                                           std::memory_order_relaxed)) {
        }
        break;
      }
    }
  }
  size_t idx = best.load(std::memory_order_relaxed);
  if (idx == SIZE_MAX) return std::nullopt;
  return try_candidate(a, s, idx);
}

}  // namespace

std::optional<Group> complement_search_serial(
    const Group& g, const Group& a, std::span<const SignedPerm> hints) {
  auto s = scan_setup(g, a, hints);
  if (!s) return Group::trivial();
  return scan_serial(a, *s);
}

std::optional<Group> complement_search_parallel(
    const Group& g, const Group& a, std::span<const SignedPerm> hints) {
  auto s = scan_setup(g, a, hints);
  if (!s) return Group::trivial();
  return scan_parallel(a, *s);
}

std::optional<Group> complement_search(const Group& g, const Group& a,
                                       std::span<const SignedPerm> hints) {
  auto s = scan_setup(g, a, hints);
  if (!s) return Group::trivial();
  if (s->total <= 4096) return scan_serial(a, *s);
  return scan_parallel(a, *s);
}

}  // namespace so7
