#pragma once

#include <vector>

#include "so7/gf2.hpp"
#include "so7/group.hpp"

namespace so7 {

struct Rational {
  long long num = 0;
  long long den = 1;

  bool operator==(const Rational&) const = default;
};

// <chi, chi> for the natural 7-dimensional character chi(g) = trace(g),
// reduced.  Equals 1 exactly when the representation is irreducible.
Rational char_norm(const Group& g);
bool is_irreducible(const Group& g);

// Does the permutation part act transitively on the 7 coordinate axes?
bool is_transitive_on_axes(const Group& g);

// A +-1 character of the diagonal group of a code: v -> (-1)^{u.v}, held
// as the canonical representative of u modulo the code's annihilator.
// Nonzero rep <=> nontrivial character.
struct Functional {
  Gf2Vec rep;

  bool operator==(const Functional&) const = default;
  auto operator<=>(const Functional&) const = default;
};

Functional canonical_functional(const Gf2Code& code, Gf2Vec u);

// All 2^dim - 1 nontrivial functionals, ascending by representative.
std::vector<Functional> functionals(const Gf2Code& code);

// g . eta, the monomial action on characters (only the permutation part
// matters: conjugating diag(v) by g permutes coordinates).
Functional act(const Gf2Code& code, const SignedPerm& g, Functional eta);

// Orbits of g on the nontrivial functionals.  Each orbit is ascending and
// orbits are ordered by least member.
std::vector<std::vector<Functional>> functional_orbits(const Group& g,
                                                       const Gf2Code& code);

// Stabiliser of eta in g (always contains the full diagonal group).
Group inertia_group(const Group& g, const Gf2Code& code, Functional eta);

// Index-2 kernel subcode {v in code : eta(diag(v)) = 1}.
Gf2Code kernel_code(const Gf2Code& code, Functional eta);

// Class-count surplus of eta: k(I/ker eta) - k(I/A) for I the inertia
// group.  Summed over functional orbits this is exactly the number of
// conjugacy classes of the big group beyond those of its diagonal
// quotient, which is the cross-check the whole pipeline hangs on.
size_t gamma_count(const Group& inertia, const Gf2Code& code, Functional eta);

struct OrbitRecord {
  size_t size = 0;
  size_t inertia_index = 0;  // |G| / |I|, checked against the orbit size
  size_t gamma = 0;
};

struct CliffordCount {
  size_t nfc = 0;       // classes of G / diag
  size_t fc_orbit = 0;  // sum of gamma over functional orbits
  size_t fc_paper = 0;  // gamma(e0 functional) * (orbit count of one 7-element)
  size_t direct = 0;    // classes of G, counted on elements
  std::vector<OrbitRecord> orbits;
};

// The three independent class counts for a monomial group with diagonal
// part diag(code).  Throws so7::Error when the code is trivial or its
// diagonal group is not normal in g; the caller decides whether
// direct == nfc + fc_orbit (it must, for any valid input).
CliffordCount clifford_count(const Group& g, const Gf2Code& code);

// Trace at each conjugacy class, in class order.  Throws InternalError if
// the trace fails to be constant on some class (it never can be for true
// classes, so a violation means the partition is broken).
std::vector<int> natural_character(const Group& g);

Group adjoin_neg_identity(const Group& g);

}  // namespace so7
