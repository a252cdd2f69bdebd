#pragma once

#include <optional>
#include <span>
#include <vector>

#include "so7/group.hpp"

namespace so7 {

// Smallest normal subgroup of g containing seed.
Group normal_closure(const Group& g, std::vector<SignedPerm> seed);

// Normal closure of the generator commutators.
Group derived_subgroup(const Group& g);

Group center(const Group& g);

// Elements of g commuting with x; throws so7::Error when x lies outside g.
Group centralizer(const Group& g, SignedPerm x);

// No proper nontrivial normal subgroup (trivial group counts as not
// simple).  Decided by normal closures of class representatives.
bool is_simple(const Group& g);

// Conjugation-invariant profile used to separate non-isomorphic groups of
// equal order.  Two conjugate (or isomorphic-via-monomial-relabelling)
// groups always agree on it.
struct GroupFingerprint {
  size_t order = 0;
  std::vector<size_t> class_sizes;                      // ascending
  std::vector<std::pair<int, size_t>> order_histogram;  // element order -> count
  size_t derived_order = 0;
  size_t center_order = 0;

  bool operator==(const GroupFingerprint&) const = default;
  auto operator<=>(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const Group& g);

// Every subgroup H with seed <= H <= ambient (both ends included).  BFS on
// one-element extensions: closure(H + g) only depends on the coset Hg, so
// each coset is tried once.  Output is sorted by (order, element list) and
// deduplicated by exact element set.
std::vector<Group> subgroups_above(const Group& ambient, const Group& seed);

// Is t h1 t^-1 == h2 for some t in ambient?
bool are_conjugate(const Group& ambient, const Group& h1, const Group& h2);

// One representative per ambient-conjugacy class, keeping the first of
// each class in input order.
std::vector<Group> merge_conjugate_subgroups(const Group& ambient,
                                             std::vector<Group> subs);

// Search for a complement of the normal subgroup a in g: a subgroup C with
// C \cap a = 1 and C a = g.  Exhaustive over one generating tuple
// (q_1..q_k) of g/a: a complement exists iff some (a_1..a_k) in a^k makes
// closure(a_1 q_1, ..., a_k q_k) hit order [g:a], because a complement
// meets each coset exactly once.  quotient_gen_hints, when given, supplies
// the q_i (they must generate g together with a); otherwise generators of
// the factor group are found by a deterministic scan.  Returns the
// complement through the lexicographically least (a_1..a_k), or nullopt.
std::optional<Group> complement_search(
    const Group& g, const Group& a,
    std::span<const SignedPerm> quotient_gen_hints = {});

// Serial / parallel scan kernels behind complement_search.
std::optional<Group> complement_search_serial(
    const Group& g, const Group& a,
    std::span<const SignedPerm> quotient_gen_hints = {});
std::optional<Group> complement_search_parallel(
    const Group& g, const Group& a,
    std::span<const SignedPerm> quotient_gen_hints = {});

}  // namespace so7
