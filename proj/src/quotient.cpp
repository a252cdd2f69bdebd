#include "so7/quotient.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cassert>

#include "so7/error.hpp"

namespace so7 {

namespace {

struct Labeling {
  std::vector<SignedPerm> reps;
  FlatMap labels;

  explicit Labeling(size_t expected) : labels(expected) {}
};

// Label every element of g with its coset modulo n, BFS order from the
// identity coset along right multiplication by g's generators.
Labeling build_labeling(const Group& g, const Group& n,
                        const std::vector<SignedPerm>& gens) {
  Labeling lab(g.order());
  std::vector<uint32_t> queue;
  auto discover = [&](SignedPerm r) {
    uint32_t id = uint32_t(lab.reps.size());
    lab.reps.push_back(r);
    for (const SignedPerm& a : n.elements())
      lab.labels.insert_or_get((r * a).raw(), id);
    queue.push_back(id);
  };
  discover(SignedPerm::identity());
  for (size_t head = 0; head < queue.size(); ++head) {
    SignedPerm r = lab.reps[queue[head]];
    for (const SignedPerm& gen : gens) {
      SignedPerm h = r * gen;
      if (!lab.labels.contains(h.raw())) discover(h);
    }
  }
  return lab;
}

// Orbit sweep over coset labels under a conjugation callback.
template <class ConjFn>
std::vector<size_t> coset_class_sizes(size_t m,
                                      const std::vector<uint16_t>& gen_labels,
                                      ConjFn conj) {
  std::vector<char> visited(m, 0);
  std::vector<size_t> sizes;
  std::vector<uint32_t> queue;
  for (uint32_t start = 0; start < m; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    queue.assign(1, start);
    size_t count = 0;
    while (!queue.empty()) {
      uint32_t x = queue.back();
      queue.pop_back();
      ++count;
      for (uint16_t gl : gen_labels) {
        uint32_t y = conj(gl, x);
        if (!visited[y]) {
          visited[y] = 1;
          queue.push_back(y);
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

}  // namespace

bool is_normal(const Group& g, const Group& n) {
  if (!g.contains_group(n)) return false;
  std::vector<SignedPerm> ngens = effective_generators(n);
  for (const SignedPerm& x : effective_generators(g)) {
    SignedPerm xinv = x.inverse();
    for (const SignedPerm& a : ngens)
      if (!n.contains(x * a * xinv)) return false;
  }
  return true;
}

QuotientGroup::QuotientGroup(const Group& g, const Group& n) : labels_(g.order()) {
  if (!is_normal(g, n)) throw Error("quotient needs a normal subgroup");
  const size_t m = g.order() / n.order();
  if (m > 8192) throw Error("quotient index too large for the coset table");
  std::vector<SignedPerm> gens = effective_generators(g);
  Labeling lab = build_labeling(g, n, gens);
  assert(lab.reps.size() == m);
  reps_ = std::move(lab.reps);
  labels_ = std::move(lab.labels);

  table_.resize(m * m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long a = 0; a < long(m); ++a)
    for (size_t b = 0; b < m; ++b)
      table_[size_t(a) * m + b] = label(reps_[size_t(a)] * reps_[b]);

  inv_.resize(m);
  for (size_t a = 0; a < m; ++a)
    inv_[a] = label(reps_[a].inverse());

  for (const SignedPerm& x : gens) {
    uint16_t l = label(x);
    if (std::find(gen_labels_.begin(), gen_labels_.end(), l) ==
        gen_labels_.end())
      gen_labels_.push_back(l);
  }
}

size_t QuotientGroup::class_count() const { return class_sizes().size(); }

ClassPartition quotient_classes(const QuotientGroup& q) {
  const size_t m = q.order();
  std::vector<char> visited(m, 0);
  ClassPartition out;
  std::vector<uint16_t> queue;
  for (uint16_t start = 0; start < m; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    queue.assign(1, start);
    std::vector<SignedPerm> members;
    while (!queue.empty()) {
      uint16_t x = queue.back();
      queue.pop_back();
      members.push_back(q.rep(x));
      for (uint16_t a = 0; a < m; ++a) {
        uint16_t y = q.mul(q.mul(a, x), q.inv(a));
        if (!visited[y]) {
          visited[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const std::vector<SignedPerm>& a,
               const std::vector<SignedPerm>& b) { return a[0] < b[0]; });
  return out;
}

std::vector<size_t> QuotientGroup::class_sizes() const {
  return coset_class_sizes(order(), gen_labels_,
                           [&](uint16_t g, uint32_t x) -> uint32_t {
                             return mul(mul(g, uint16_t(x)), inv(g));
                           });
}

size_t quotient_class_count(const Group& g, const Group& n) {
  if (!is_normal(g, n)) throw Error("quotient needs a normal subgroup");
  const size_t m = g.order() / n.order();
  std::vector<SignedPerm> gens = effective_generators(g);
  Labeling lab = build_labeling(g, n, gens);
  assert(lab.reps.size() == m);

  std::vector<std::pair<SignedPerm, SignedPerm>> conj;
  std::vector<uint16_t> gen_ids;
  for (const SignedPerm& x : gens) {
    conj.emplace_back(x, x.inverse());
    gen_ids.push_back(uint16_t(conj.size() - 1));
  }
  return coset_class_sizes(m, gen_ids,
                           [&](uint16_t k, uint32_t x) -> uint32_t {
                             const auto& [p, pinv] = conj[k];
                             return lab.labels.at(
                                 (p * lab.reps[x] * pinv).raw());
                           })
      .size();
}

}  // namespace so7
