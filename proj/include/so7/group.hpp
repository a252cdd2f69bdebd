#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "so7/signed_perm.hpp"

namespace so7 {

struct ClassPartition;

// Largest possible order: the full signed-permutation group, 2^7 * 7!.
inline constexpr size_t kMaxGroupOrder = 645120;

// Closure of a generating set under multiplication (monoid closure equals
// group closure: every element has finite order).  Elements come back
// sorted ascending.  The serial and parallel kernels compute the same set;
// the unqualified version picks one by size.
std::vector<SignedPerm> closure_serial(std::span<const SignedPerm> gens);
std::vector<SignedPerm> closure_parallel(std::span<const SignedPerm> gens);
std::vector<SignedPerm> closure_elements(std::span<const SignedPerm> gens);

// Serial closure that gives up once the set grows past max_order; returns
// an empty vector in that case (a group never has order 0, so the caller
// can test emptiness).
std::vector<SignedPerm> closure_bounded(std::span<const SignedPerm> gens,
                                        size_t max_order);

// Index of x in a sorted element vector; asserts membership.
inline size_t sorted_index(const std::vector<SignedPerm>& v, SignedPerm x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  assert(it != v.end() && *it == x);
  return size_t(it - v.begin());
}

inline bool sorted_contains(const std::vector<SignedPerm>& v, SignedPerm x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// A finite group of signed permutations, held as its full sorted element
// list plus the generating set it was built from.  Copies share storage.
class Group {
 public:
  static Group trivial() {
    return from_elements({SignedPerm::identity()}, {});
  }

  static Group generate(std::vector<SignedPerm> gens);

  // Wrap an element list the caller knows is a group (sorted here).  Only
  // identity membership is checked; closure is the caller's contract.
  static Group from_elements(std::vector<SignedPerm> elements,
                             std::vector<SignedPerm> generators);

  size_t order() const { return d_->elements.size(); }
  const std::vector<SignedPerm>& elements() const { return d_->elements; }
  const std::vector<SignedPerm>& generators() const { return d_->generators; }

  bool contains(SignedPerm g) const {
    return sorted_contains(d_->elements, g);
  }
  bool contains_group(const Group& h) const;
  bool same_elements(const Group& h) const {
    return d_ == h.d_ || d_->elements == h.d_->elements;
  }

  size_t index_of(SignedPerm g) const { return sorted_index(d_->elements, g); }

  // Conjugacy classes, computed on first use and cached.
  const ClassPartition& classes() const;

 private:
  struct Data {
    std::vector<SignedPerm> elements;
    std::vector<SignedPerm> generators;
    mutable std::once_flag classes_once;
    mutable std::shared_ptr<const ClassPartition> classes;
  };

  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// The group's stored generators, or a greedy set when it has none (groups
// wrapped straight from element lists).
std::vector<SignedPerm> effective_generators(const Group& g);

// Minimal-ish generating set picked greedily from the sorted element list:
// repeatedly adjoin the first element outside the span so far.  Returns the
// generators; their closure is checked to reproduce the input (that check
// is what certifies an untrusted element list as a group).
std::vector<SignedPerm> greedy_generators(
    const std::vector<SignedPerm>& sorted_elements);

// Same, but starting from seed generators already known to lie in the
// group (e.g. the diagonal part of a monomial group); saves most closure
// rounds when the seed subgroup is a big chunk of the whole.
std::vector<SignedPerm> greedy_generators(
    const std::vector<SignedPerm>& sorted_elements,
    std::vector<SignedPerm> seed_gens);

}  // namespace so7
