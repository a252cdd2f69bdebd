#include "so7/group.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "so7/classes.hpp"
#include "so7/error.hpp"
#include "so7/flat_hash.hpp"

namespace so7 {

namespace {

// Frontier size at which closure_elements abandons the serial run and
// restarts in parallel; the wasted serial work is negligible at this size.
constexpr size_t kParallelCutover = 32768;

std::vector<SignedPerm> seed_list(std::span<const SignedPerm> gens) {
  std::vector<SignedPerm> seeds{SignedPerm::identity()};
  for (const SignedPerm& g : gens)
    if (!g.is_identity()) seeds.push_back(g);
  return seeds;
}

}  // namespace

std::vector<SignedPerm> closure_serial(std::span<const SignedPerm> gens) {
  std::vector<SignedPerm> out = closure_bounded(gens, kMaxGroupOrder);
  if (out.empty())
    throw Error("closure exceeded the signed-permutation capacity");
  return out;
}

std::vector<SignedPerm> closure_bounded(std::span<const SignedPerm> gens,
                                        size_t max_order) {
  FlatSet seen(256);
  std::vector<SignedPerm> elements, frontier;
  for (const SignedPerm& s : seed_list(gens)) {
    if (seen.insert(s.raw())) {
      elements.push_back(s);
      frontier.push_back(s);
    }
  }
  std::vector<SignedPerm> next;
  while (!frontier.empty()) {
    next.clear();
    for (const SignedPerm& f : frontier) {
      for (const SignedPerm& g : gens) {
        SignedPerm h = f * g;
        if (seen.insert(h.raw())) {
          if (elements.size() >= max_order) return {};
          elements.push_back(h);
          next.push_back(h);
        }
      }
    }
    frontier.swap(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<SignedPerm> closure_parallel(std::span<const SignedPerm> gens) {
  ConcurrentSet seen(kMaxGroupOrder);
  std::vector<SignedPerm> elements, frontier;
  for (const SignedPerm& s : seed_list(gens)) {
    if (seen.insert(s.raw())) {
      elements.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<SignedPerm> local;
#pragma omp for schedule(static) nowait
      for (long idx = 0; idx < long(frontier.size()); ++idx) {
        for (const SignedPerm& g : gens) {
          SignedPerm h = frontier[size_t(idx)] * g;
          if (seen.insert(h.raw())) local.push_back(h);
        }
      }
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
#else
    for (const SignedPerm& f : frontier)
      for (const SignedPerm& g : gens) {
        SignedPerm h = f * g;
        if (seen.insert(h.raw())) next.push_back(h);
      }
#endif
    elements.insert(elements.end(), next.begin(), next.end());
    frontier.swap(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<SignedPerm> closure_elements(std::span<const SignedPerm> gens) {
  FlatSet seen(256);
  std::vector<SignedPerm> elements, frontier;
  for (const SignedPerm& s : seed_list(gens)) {
    if (seen.insert(s.raw())) {
      elements.push_back(s);
      frontier.push_back(s);
    }
  }
  std::vector<SignedPerm> next;
  while (!frontier.empty()) {
    if (elements.size() > kParallelCutover) return closure_parallel(gens);
    next.clear();
    for (const SignedPerm& f : frontier) {
      for (const SignedPerm& g : gens) {
        SignedPerm h = f * g;
        if (seen.insert(h.raw())) {
          elements.push_back(h);
          next.push_back(h);
        }
      }
    }
    frontier.swap(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

Group Group::generate(std::vector<SignedPerm> gens) {
  std::vector<SignedPerm> elements = closure_elements(gens);
  return from_elements(std::move(elements), std::move(gens));
}

Group Group::from_elements(std::vector<SignedPerm> elements,
                           std::vector<SignedPerm> generators) {
  std::sort(elements.begin(), elements.end());
  assert(std::adjacent_find(elements.begin(), elements.end()) ==
         elements.end());
  if (!sorted_contains(elements, SignedPerm::identity()))
    throw Error("element set lacks the identity");
  auto d = std::make_shared<Data>();
  d->elements = std::move(elements);
  d->generators = std::move(generators);
  return Group(std::move(d));
}

bool Group::contains_group(const Group& h) const {
  if (h.order() > order()) return false;
  return std::includes(d_->elements.begin(), d_->elements.end(),
                       h.d_->elements.begin(), h.d_->elements.end());
}

const ClassPartition& Group::classes() const {
  std::call_once(d_->classes_once, [&] {
    std::vector<SignedPerm> gens = d_->generators;
    if (gens.empty()) gens = greedy_generators(d_->elements);
    d_->classes = std::make_shared<const ClassPartition>(
        conjugacy_classes(d_->elements, gens));
  });
  return *d_->classes;
}

std::vector<SignedPerm> effective_generators(const Group& g) {
  if (!g.generators().empty()) return g.generators();
  if (g.order() == 1) return {};
  return greedy_generators(g.elements());
}

std::vector<SignedPerm> greedy_generators(
    const std::vector<SignedPerm>& sorted_elements) {
  return greedy_generators(sorted_elements, {});
}

std::vector<SignedPerm> greedy_generators(
    const std::vector<SignedPerm>& sorted_elements,
    std::vector<SignedPerm> seed_gens) {
  std::vector<SignedPerm> gens = std::move(seed_gens);
  std::vector<SignedPerm> span =
      gens.empty() ? std::vector<SignedPerm>{SignedPerm::identity()}
                   : closure_elements(gens);
  for (const SignedPerm& e : sorted_elements) {
    if (sorted_contains(span, e)) continue;
    gens.push_back(e);
    span = closure_elements(gens);
    if (span.size() >= sorted_elements.size()) break;
  }
  if (span != sorted_elements)
    throw Error("element list is not closed under multiplication");
  return gens;
}

}  // namespace so7
