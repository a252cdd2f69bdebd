#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so7/gf2.hpp"
#include "so7/group.hpp"

namespace so7 {

struct Table1Claim {
  size_t nfc = 0;
  size_t fc = 0;
  size_t total = 0;
};

struct CatalogEntry {
  std::string id;
  std::string base_id;  // id without the +neg suffix
  int case_no = 0;      // 1, 2 or 3
  size_t order = 0;
  bool neg = false;
  std::optional<Table1Claim> table1;  // base case-2/3 entries only
};

// The 24 ids in listing order: 12 base groups, then their +neg variants.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);

// Fixed permutations (as det-+1 signed permutations via the sign-twisted
// lift; all but neg_perm/mul3 are even, so those two get negated entries).
SignedPerm alpha();        // i -> i+1 mod 7
SignedPerm f21_beta();     // i -> 2i mod 7, conjugates alpha to alpha^2
SignedPerm singer();       // multiplication by x on GF(8): the 7-cycle inside the PSL(3,2) coordinate action
SignedPerm frobenius();    // v -> v^2 on GF(8): order 3, normalizes the Singer cycle
SignedPerm neg_perm();     // i -> -i mod 7
SignedPerm mul3_perm();    // i -> 3i mod 7

// The 168 coordinate permutations induced by GL(3,2) on the nonzero
// vectors of GF(2)^3 (coordinate i <-> vector i+1), as plain permutation
// matrices (every one is even).
Group gl32_perm_group();

// All 5040 plain permutation matrices.
Group s7_perm_group();

// Everything in SO(7)-monomial form normalizing the A8 diagonal group:
// even-weight diagonals extended by the GL(3,2) coordinate action; order
// 64 * 168 = 10752.
Group normalizer_of_a8();

// The diagonal code of a catalog group: A8 / A64 for cases 2/3, enlarged
// by the all-ones vector for +neg variants, dimension 0 / 1 for case 1.
Gf2Code code_for(const std::string& id);

// Build (and memoize) a catalog group; throws so7::Error for unknown ids
// and InternalError if a recipe closure misses its cataloged order.
Group named_group(const std::string& id);

// Generators of g lying outside its diagonal part; together with the
// code's diagonal basis they regenerate g, so they serve as quotient
// generator hints for complement searches.
std::vector<SignedPerm> nondiagonal_generators(const Group& g);

struct InvariantCode {
  Gf2Code code;
  bool seven_cycle_fpf = false;
};

// All nonzero shift-invariant codes of length 7 with only even-weight
// words, from the divisor lattice of x^7 - 1 = (x+1)(x^3+x+1)(x^3+x^2+1),
// each with the fixed-point-freeness of the shift on nonzero words.
// Sorted by dimension: expected dimensions {3, 3, 6}.
std::vector<InvariantCode> enumerate_invariant_codes();

// Subgroups G of normalizer_of_a8() with |G| = 1344, diagonal part exactly
// A8, via the lattice above the order-56 Sylow-7 preimage; one
// representative per fingerprint class.
std::vector<Group> search_order_1344();

// The monomial PSL(2,7): an order-168 complement of the even diagonals in
// normalizer_of_a8() with character norm 1 and no proper normal subgroup.
// The plain permutation copy (norm 2) is rejected by the filters.
Group search_case1_psl27();

// True iff the preimage in the det-1 monomial group of every subgroup of
// order 14 — and, same argument, 42 — above the 7-cycle in S7 splits over
// the even-weight diagonal group.
bool exclude_nonsplit_64_14();

}  // namespace so7
