#include "so7/classes.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "so7/flat_hash.hpp"
#include "so7/group.hpp"

namespace so7 {

namespace {

constexpr size_t kUnionFindCutover = 20000;

using ConjPair = std::pair<SignedPerm, SignedPerm>;

std::vector<ConjPair> with_inverses(std::span<const SignedPerm> gens) {
  std::vector<ConjPair> out;
  out.reserve(gens.size());
  for (const SignedPerm& g : gens) out.emplace_back(g, g.inverse());
  return out;
}

uint32_t uf_find(std::vector<std::atomic<uint32_t>>& parent, uint32_t x) {
  while (true) {
    uint32_t p = parent[x].load(std::memory_order_relaxed);
    if (p == x) return x;
    uint32_t pp = parent[p].load(std::memory_order_relaxed);
    if (pp == p) return p;
    parent[x].compare_exchange_weak(p, pp, std::memory_order_relaxed);
    x = pp;
  }
}

void uf_unite(std::vector<std::atomic<uint32_t>>& parent, uint32_t a,
              uint32_t b) {
  while (true) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uint32_t expected = b;
    if (parent[b].compare_exchange_strong(expected, a,
                                          std::memory_order_relaxed))
      return;
  }
}

ClassPartition finish(std::vector<std::vector<SignedPerm>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return ClassPartition{std::move(classes)};
}

}  // namespace

std::vector<size_t> ClassPartition::sizes() const {
  std::vector<size_t> s;
  s.reserve(classes.size());
  for (const auto& c : classes) s.push_back(c.size());
  return s;
}

std::vector<size_t> ClassPartition::sizes_sorted() const {
  std::vector<size_t> s = sizes();
  std::sort(s.begin(), s.end());
  return s;
}

ClassPartition conjugacy_classes_serial(
    const std::vector<SignedPerm>& sorted_elements,
    std::span<const SignedPerm> gens) {
  const size_t n = sorted_elements.size();
  std::vector<ConjPair> conj = with_inverses(gens);
  std::vector<char> visited(n, 0);
  std::vector<std::vector<SignedPerm>> classes;
  std::vector<size_t> queue;
  for (size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    queue.assign(1, start);
    std::vector<SignedPerm> cls;
    while (!queue.empty()) {
      size_t xi = queue.back();
      queue.pop_back();
      SignedPerm x = sorted_elements[xi];
      cls.push_back(x);
      for (const auto& [g, ginv] : conj) {
        SignedPerm y = g * x * ginv;
        size_t yi = sorted_index(sorted_elements, y);
        if (!visited[yi]) {
          visited[yi] = 1;
          queue.push_back(yi);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return finish(std::move(classes));
}

ClassPartition conjugacy_classes_parallel(
    const std::vector<SignedPerm>& sorted_elements,
    std::span<const SignedPerm> gens) {
  const size_t n = sorted_elements.size();
  std::vector<ConjPair> conj = with_inverses(gens);
  // A few fixed pseudo-random conjugators (any group element is valid).
  std::mt19937 rng(0x50377u);
  for (int k = 0; k < 4 && n > 1; ++k) {
    SignedPerm r = sorted_elements[rng() % n];
    conj.emplace_back(r, r.inverse());
  }

  std::vector<std::atomic<uint32_t>> parent(n);
  for (size_t i = 0; i < n; ++i)
    parent[i].store(uint32_t(i), std::memory_order_relaxed);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < long(n); ++i) {
    SignedPerm x = sorted_elements[size_t(i)];
    for (const auto& [g, ginv] : conj) {
      SignedPerm y = g * x * ginv;
      uf_unite(parent, uint32_t(i),
               uint32_t(sorted_index(sorted_elements, y)));
    }
  }

  FlatMap root_to_class(1024);
  std::vector<std::vector<SignedPerm>> classes;
  for (size_t i = 0; i < n; ++i) {
    uint32_t root = uf_find(parent, uint32_t(i));
    uint32_t ci = root_to_class.insert_or_get(root, uint32_t(classes.size()));
    if (ci == classes.size()) classes.emplace_back();
    classes[ci].push_back(sorted_elements[i]);
  }
  return finish(std::move(classes));
}

ClassPartition conjugacy_classes(const std::vector<SignedPerm>& sorted_elements,
                                 std::span<const SignedPerm> gens) {
  if (sorted_elements.size() > kUnionFindCutover)
    return conjugacy_classes_parallel(sorted_elements, gens);
  return conjugacy_classes_serial(sorted_elements, gens);
}

}  // namespace so7
