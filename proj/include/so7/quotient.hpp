#pragma once

#include <cstdint>
#include <vector>

#include "so7/classes.hpp"
#include "so7/flat_hash.hpp"
#include "so7/group.hpp"

namespace so7 {

bool is_normal(const Group& g, const Group& n);

// Factor group G/N as a finite multiplication table over coset labels.
// Cosets are labelled in BFS discovery order from the identity coset
// (label 0), walking right multiplication by G's generators, so labels are
// deterministic.  rep(c) is the first element through which coset c was
// discovered.  The n x n table keeps labels in uint16, which caps the index
// at 8192 (the largest table this project needs is 5040).
class QuotientGroup {
 public:
  QuotientGroup(const Group& g, const Group& n);

  size_t order() const { return reps_.size(); }
  uint16_t label(SignedPerm x) const { return uint16_t(labels_.at(x.raw())); }
  SignedPerm rep(uint16_t c) const { return reps_[c]; }
  uint16_t mul(uint16_t a, uint16_t b) const {
    return table_[size_t(a) * reps_.size() + b];
  }
  uint16_t inv(uint16_t a) const { return inv_[a]; }
  const std::vector<uint16_t>& generator_labels() const { return gen_labels_; }

  // Conjugacy classes of the factor group, as counts of coset labels.
  size_t class_count() const;
  std::vector<size_t> class_sizes() const;

 private:
  std::vector<SignedPerm> reps_;
  FlatMap labels_;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inv_;
  std::vector<uint16_t> gen_labels_;
};

// Conjugacy classes of the factor group as a partition of the coset
// representatives.
ClassPartition quotient_classes(const QuotientGroup& q);

// Number of conjugacy classes of G/N without materialising the table:
// sweeps coset representatives, conjugating at the element level.  Handles
// indices far beyond the uint16 table cap.
size_t quotient_class_count(const Group& g, const Group& n);

}  // namespace so7
