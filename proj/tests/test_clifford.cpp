#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "so7/atlas.hpp"
#include "so7/classes.hpp"
#include "so7/clifford.hpp"
#include "so7/error.hpp"
#include "so7/gf2.hpp"
#include "so7/group.hpp"

using so7::Functional;
using so7::Gf2Code;
using so7::Gf2Vec;
using so7::Group;
using so7::Rational;
using so7::SignedPerm;

namespace {

Group diag_group_of(const Gf2Code& code) {
  std::vector<SignedPerm> elems;
  for (const SignedPerm& d : so7::diag_group(code)) elems.push_back(d);
  return Group::from_elements(std::move(elems), {});
}

}  // namespace

TEST_CASE("character norm") {
  // For the even diagonal group the traces are 7 - 2*weight over the 64
  // even words: 1*49 + 21*9 + 35*1 + 7*25 = 448 = 64 * 7.
  CHECK(so7::char_norm(diag_group_of(so7::code_a64())) == Rational{7, 1});
  // A 2-transitive permutation action splits as trivial + irreducible.
  CHECK(so7::char_norm(so7::gl32_perm_group()) == Rational{2, 1});
  CHECK(so7::char_norm(so7::s7_perm_group()) == Rational{2, 1});

  CHECK(so7::is_irreducible(so7::named_group("case2-z7")));
  CHECK(so7::is_irreducible(so7::named_group("case3-z7")));
  CHECK(!so7::is_irreducible(so7::gl32_perm_group()));
}

TEST_CASE("axis transitivity") {
  CHECK(so7::is_transitive_on_axes(so7::named_group("case2-z7")));
  CHECK(so7::is_transitive_on_axes(Group::generate({so7::alpha()})));
  CHECK(!so7::is_transitive_on_axes(diag_group_of(so7::code_a64())));
}

TEST_CASE("functionals are cosets modulo the annihilator") {
  std::vector<Functional> f8 = so7::functionals(so7::code_a8());
  CHECK(f8.size() == 7);
  std::vector<Functional> f64 = so7::functionals(so7::code_a64());
  CHECK(f64.size() == 63);
  CHECK(std::is_sorted(f64.begin(), f64.end()));
  CHECK(std::adjacent_find(f64.begin(), f64.end()) == f64.end());

  // 1 and 126 differ by the all-ones word, which annihilates the even
  // code, so they are the same functional.
  CHECK(so7::canonical_functional(so7::code_a64(), Gf2Vec{126}) ==
        so7::canonical_functional(so7::code_a64(), Gf2Vec{1}));
  CHECK(so7::canonical_functional(so7::code_a64(), Gf2Vec{127}) ==
        Functional{Gf2Vec{0}});
  // Every listed functional is canonical and genuinely nontrivial.
  for (const Functional& f : f64) {
    CHECK(f.rep.bits != 0);
    CHECK(so7::canonical_functional(so7::code_a64(), f.rep) == f);
  }
}

TEST_CASE("action on functionals matches conjugation") {
  const Gf2Code& code = so7::code_a64();
  Group g = so7::named_group("case3-f42");
  std::mt19937 rng(2026);
  std::uniform_int_distribution<size_t> pick(0, g.order() - 1);
  std::vector<Functional> fs = so7::functionals(code);
  for (int t = 0; t < 50; ++t) {
    SignedPerm x = g.elements()[pick(rng)];
    SignedPerm y = g.elements()[pick(rng)];
    Functional eta = fs[t % fs.size()];
    // Homomorphism in the group argument.
    CHECK(so7::act(code, x * y, eta) ==
          so7::act(code, x, so7::act(code, y, eta)));
    // (x.eta)(diag v) == eta(x^-1 diag(v) x) on every code word.
    Functional moved = so7::act(code, x, eta);
    std::array<int, 7> xinv = x.inverse().perm();
    for (const Gf2Vec& v : code.words())
      CHECK(moved.rep.dot(v) == eta.rep.dot(v.permuted(xinv)));
  }
  // Identity acts trivially.
  CHECK(so7::act(code, SignedPerm::identity(), fs[5]) == fs[5]);
}

TEST_CASE("functional orbits") {
  auto sizes = [](const std::vector<std::vector<Functional>>& orbits) {
    std::vector<size_t> s;
    for (const auto& o : orbits) s.push_back(o.size());
    std::sort(s.begin(), s.end());
    return s;
  };

  auto o1 = so7::functional_orbits(so7::named_group("case2-z7"),
                                   so7::code_a8());
  CHECK(sizes(o1) == std::vector<size_t>{7});

  auto o2 = so7::functional_orbits(so7::named_group("case3-z7"),
                                   so7::code_a64());
  CHECK(sizes(o2) ==
        std::vector<size_t>{7, 7, 7, 7, 7, 7, 7, 7, 7});
  // Orbits partition all 63 functionals, each ascending, least members
  // increasing.
  std::vector<Functional> seen;
  for (const auto& o : o2) {
    CHECK(std::is_sorted(o.begin(), o.end()));
    seen.insert(seen.end(), o.begin(), o.end());
  }
  for (size_t k = 0; k + 1 < o2.size(); ++k)
    CHECK(o2[k][0] < o2[k + 1][0]);
  std::sort(seen.begin(), seen.end());
  CHECK(seen == so7::functionals(so7::code_a64()));

  // The full symmetric group sees one orbit per weight pair {1,6}, {2,5},
  // {3,4}.
  auto o3 = so7::functional_orbits(so7::named_group("case3-s7"),
                                   so7::code_a64());
  CHECK(sizes(o3) == std::vector<size_t>{7, 21, 35});
}

TEST_CASE("inertia groups and kernels") {
  Functional e0 = so7::canonical_functional(so7::code_a64(), Gf2Vec{1});
  Group z7 = so7::named_group("case3-z7");
  Group i1 = so7::inertia_group(z7, so7::code_a64(), e0);
  CHECK(i1.order() == 64);
  CHECK(i1.same_elements(diag_group_of(so7::code_a64())));

  Group s7m = so7::named_group("case3-s7");
  Group i2 = so7::inertia_group(s7m, so7::code_a64(), e0);
  CHECK(i2.order() == 46080);
  CHECK(s7m.order() / i2.order() == 7);

  Gf2Code k = so7::kernel_code(so7::code_a64(), e0);
  CHECK(k.dim() == 5);
  for (const Gf2Vec& v : k.words()) {
    CHECK(v.get(0) == 0);
    CHECK(v.weight() % 2 == 0);
  }
  CHECK_THROWS_AS(
      so7::kernel_code(so7::code_a64(),
                       so7::canonical_functional(so7::code_a64(), Gf2Vec{127})),
      so7::Error);
}

TEST_CASE("gamma counts") {
  Group a64 = diag_group_of(so7::code_a64());
  CHECK(so7::gamma_count(a64, so7::code_a64(),
                         so7::canonical_functional(so7::code_a64(),
                                                   Gf2Vec{1})) == 1);
  Group a8 = diag_group_of(so7::code_a8());
  CHECK(so7::gamma_count(a8, so7::code_a8(),
                         so7::canonical_functional(so7::code_a8(),
                                                   Gf2Vec{1})) == 1);
}

TEST_CASE("clifford counts for the cyclic monomial groups") {
  so7::CliffordCount c2 =
      so7::clifford_count(so7::named_group("case2-z7"), so7::code_a8());
  CHECK(c2.nfc == 7);
  CHECK(c2.fc_orbit == 1);
  CHECK(c2.fc_paper == 1);
  CHECK(c2.direct == 8);
  REQUIRE(c2.orbits.size() == 1);
  CHECK(c2.orbits[0].size == 7);
  CHECK(c2.orbits[0].inertia_index == 7);
  CHECK(c2.orbits[0].gamma == 1);

  // Independent count on elements: identity, one class of seven diagonal
  // words, six cosets of size eight.
  Group g = so7::named_group("case2-z7");
  CHECK(g.classes().count() == 8);
  CHECK(g.classes().sizes_sorted() ==
        std::vector<size_t>{1, 7, 8, 8, 8, 8, 8, 8});

  so7::CliffordCount c3 =
      so7::clifford_count(so7::named_group("case3-z7"), so7::code_a64());
  CHECK(c3.nfc == 7);
  CHECK(c3.fc_orbit == 9);
  CHECK(c3.fc_paper == 9);
  CHECK(c3.direct == 16);
  CHECK(c3.direct == c3.nfc + c3.fc_orbit);
  CHECK(c3.orbits.size() == 9);
  for (const auto& rec : c3.orbits) {
    CHECK(rec.size == 7);
    CHECK(rec.inertia_index == 7);
    CHECK(rec.gamma == 1);
  }
}

TEST_CASE("natural character") {
  std::vector<int> chi = so7::natural_character(so7::named_group("case2-z7"));
  std::sort(chi.begin(), chi.end());
  CHECK(chi == std::vector<int>{-1, 0, 0, 0, 0, 0, 0, 7});
}

TEST_CASE("adjoining the negated identity doubles the classes") {
  Group g = so7::named_group("case2-z7");
  Group gneg = so7::adjoin_neg_identity(g);
  CHECK(gneg.order() == 112);
  CHECK(gneg.contains(SignedPerm::neg_identity()));
  CHECK(gneg.contains_group(g));
  CHECK(gneg.classes().count() == 16);
  // Already containing -I is a fixed point.
  CHECK(so7::adjoin_neg_identity(gneg).order() == 112);
}

TEST_CASE("clifford count rejects bad inputs") {
  Gf2Code empty = Gf2Code::span({});
  CHECK_THROWS_AS(so7::clifford_count(so7::gl32_perm_group(), empty),
                  so7::Error);
  CHECK_THROWS_AS(so7::clifford_count(so7::s7_perm_group(), so7::code_a64()),
                  so7::Error);
}
