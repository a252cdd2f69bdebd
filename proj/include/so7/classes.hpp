#pragma once

#include <span>
#include <vector>

#include "so7/signed_perm.hpp"

namespace so7 {

// Conjugacy classes of a group given by its sorted element list and a
// generating set.  Each class is sorted ascending; classes are ordered by
// their least element, so the partition is a canonical value.
struct ClassPartition {
  std::vector<std::vector<SignedPerm>> classes;

  size_t count() const { return classes.size(); }
  std::vector<size_t> sizes() const;
  std::vector<size_t> sizes_sorted() const;
  SignedPerm representative(size_t k) const { return classes[k][0]; }
};

// Orbit sweep: BFS from each unvisited element under conjugation by the
// generators (conjugation by generators reaches the whole class).
ClassPartition conjugacy_classes_serial(
    const std::vector<SignedPerm>& sorted_elements,
    std::span<const SignedPerm> gens);

// Union-find over element indices with one edge x ~ g x g^-1 per generator
// plus a few extra edges from fixed pseudo-random conjugators.  The
// generator edges alone already connect each class, so the result is exact;
// the extra edges just speed up merging.  Unions run in parallel with
// compare-exchange linking toward the smaller index.
ClassPartition conjugacy_classes_parallel(
    const std::vector<SignedPerm>& sorted_elements,
    std::span<const SignedPerm> gens);

// Dispatch by size: sweep for small groups, union-find above the cutover.
ClassPartition conjugacy_classes(const std::vector<SignedPerm>& sorted_elements,
                                 std::span<const SignedPerm> gens);

}  // namespace so7
