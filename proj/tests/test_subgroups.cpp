#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "doctest.h"
#include "so7/atlas.hpp"
#include "so7/classes.hpp"
#include "so7/error.hpp"
#include "so7/gf2.hpp"
#include "so7/group.hpp"
#include "so7/subgroups.hpp"

using so7::Group;
using so7::SignedPerm;

namespace {

SignedPerm perm(std::array<int, 7> p) { return SignedPerm::from_perm(p); }

Group s4_group() {
  return Group::generate(
      {perm({1, 0, 2, 3, 4, 5, 6}), perm({1, 2, 3, 0, 4, 5, 6})});
}

std::vector<uint32_t> key(const Group& h) {
  std::vector<uint32_t> k;
  for (const SignedPerm& e : h.elements()) k.push_back(e.raw());
  return k;
}

// Every subgroup of S4 needs at most two generators, so closing all
// singletons and pairs enumerates the full subgroup lattice.
std::set<std::vector<uint32_t>> s4_subgroups_brute() {
  Group s4 = s4_group();
  std::set<std::vector<uint32_t>> all;
  all.insert(key(Group::trivial()));
  const auto& elems = s4.elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    all.insert(key(Group::generate({elems[i]})));
    for (size_t j = i + 1; j < elems.size(); ++j)
      all.insert(key(Group::generate({elems[i], elems[j]})));
  }
  return all;
}

}  // namespace

TEST_CASE("normal closure") {
  Group s4 = s4_group();
  Group v4 = so7::normal_closure(s4, {perm({1, 0, 3, 2, 4, 5, 6})});
  CHECK(v4.order() == 4);
  Group all = so7::normal_closure(s4, {perm({1, 0, 2, 3, 4, 5, 6})});
  CHECK(all.order() == 24);
  CHECK(so7::normal_closure(s4, {SignedPerm::identity()}).order() == 1);
}

TEST_CASE("derived series") {
  Group s4 = s4_group();
  Group a4 = so7::derived_subgroup(s4);
  CHECK(a4.order() == 12);
  Group v4 = so7::derived_subgroup(a4);
  CHECK(v4.order() == 4);
  CHECK(so7::derived_subgroup(v4).order() == 1);
  CHECK(so7::derived_subgroup(so7::s7_perm_group()).order() == 2520);
}

TEST_CASE("center") {
  CHECK(so7::center(s4_group()).order() == 1);
  Group a64 = Group::generate([] {
    std::vector<SignedPerm> gens;
    for (const so7::Gf2Vec& b : so7::code_a64().basis())
      gens.push_back(SignedPerm::diag(b.bits));
    return gens;
  }());
  CHECK(so7::center(a64).same_elements(a64));
  Group z = so7::center(so7::named_group("case3-d14+neg"));
  CHECK(z.order() == 2);
  CHECK(z.contains(SignedPerm::neg_identity()));
}

TEST_CASE("centralizer") {
  Group s7 = so7::s7_perm_group();
  Group c = so7::centralizer(s7, so7::alpha());
  CHECK(c.order() == 7);
  CHECK(c.contains(so7::alpha()));
  Group s4 = s4_group();
  CHECK(so7::centralizer(s4, perm({1, 2, 3, 0, 4, 5, 6})).order() == 4);
  CHECK(so7::centralizer(s4, SignedPerm::identity()).same_elements(s4));
  CHECK_THROWS_AS(so7::centralizer(s4, so7::alpha()), so7::Error);
}

TEST_CASE("simplicity") {
  CHECK(!so7::is_simple(Group::trivial()));
  CHECK(so7::is_simple(Group::generate({so7::alpha()})));
  CHECK(!so7::is_simple(s4_group()));
  CHECK(!so7::is_simple(so7::s7_perm_group()));
  CHECK(so7::is_simple(so7::derived_subgroup(so7::s7_perm_group())));
}

TEST_CASE("fingerprint of a cyclic group") {
  so7::GroupFingerprint fp = so7::fingerprint(Group::generate({so7::alpha()}));
  CHECK(fp.order == 7);
  CHECK(fp.class_sizes == std::vector<size_t>{1, 1, 1, 1, 1, 1, 1});
  CHECK(fp.order_histogram ==
        std::vector<std::pair<int, size_t>>{{1, 1}, {7, 6}});
  CHECK(fp.derived_order == 1);
  CHECK(fp.center_order == 7);
}

TEST_CASE("subgroup lattice of S4") {
  Group s4 = s4_group();
  std::set<std::vector<uint32_t>> brute = s4_subgroups_brute();
  CHECK(brute.size() == 30);

  std::vector<Group> all = so7::subgroups_above(s4, Group::trivial());
  CHECK(all.size() == 30);
  std::set<std::vector<uint32_t>> got;
  for (const Group& h : all) got.insert(key(h));
  CHECK(got == brute);

  CHECK(so7::merge_conjugate_subgroups(s4, all).size() == 11);

  Group c3 = Group::generate({perm({1, 2, 0, 3, 4, 5, 6})});
  std::vector<Group> above = so7::subgroups_above(s4, c3);
  std::vector<size_t> orders;
  for (const Group& h : above) orders.push_back(h.order());
  CHECK(orders == std::vector<size_t>{3, 6, 12, 24});
  std::set<std::vector<uint32_t>> brute_above;
  for (const auto& k : brute) {
    std::vector<SignedPerm> elems;
    for (uint32_t r : k) elems.push_back(SignedPerm::from_raw(r));
    Group h = Group::from_elements(std::move(elems), {});
    if (h.contains_group(c3)) brute_above.insert(k);
  }
  std::set<std::vector<uint32_t>> got_above;
  for (const Group& h : above) got_above.insert(key(h));
  CHECK(got_above == brute_above);

  CHECK_THROWS_AS(so7::subgroups_above(c3, s4), so7::Error);
}

TEST_CASE("conjugacy of subgroups") {
  Group s7 = so7::s7_perm_group();
  // Point stabilizers are conjugate copies of S6.
  Group stab0 = Group::generate(
      {perm({0, 2, 1, 3, 4, 5, 6}), perm({0, 2, 3, 4, 5, 6, 1})});
  Group stab6 = Group::generate(
      {perm({1, 0, 2, 3, 4, 5, 6}), perm({1, 2, 3, 4, 5, 0, 6})});
  CHECK(stab0.order() == 720);
  CHECK(stab6.order() == 720);
  CHECK(so7::are_conjugate(s7, stab0, stab6));

  Group s4 = s4_group();
  Group t1 = Group::generate({perm({1, 0, 2, 3, 4, 5, 6})});
  Group t2 = Group::generate({perm({0, 1, 3, 2, 4, 5, 6})});
  Group dd = Group::generate({perm({1, 0, 3, 2, 4, 5, 6})});
  CHECK(so7::are_conjugate(s4, t1, t2));
  CHECK(!so7::are_conjugate(s4, t1, dd));
}

TEST_CASE("complement search on small permutation groups") {
  Group s4 = s4_group();
  Group v4 = so7::normal_closure(s4, {perm({1, 0, 3, 2, 4, 5, 6})});
  Group a4 = so7::derived_subgroup(s4);

  auto c = so7::complement_search(s4, v4);
  REQUIRE(c.has_value());
  CHECK(c->order() == 6);
  for (const SignedPerm& e : c->elements())
    CHECK((e.is_identity() || !v4.contains(e)));

  auto t = so7::complement_search(s4, a4);
  REQUIRE(t.has_value());
  CHECK(t->order() == 2);

  // The cyclic group of order 4 does not split over its subgroup of order 2.
  Group c4 = Group::generate({perm({1, 2, 3, 0, 4, 5, 6})});
  Group c2 = Group::generate({perm({2, 3, 0, 1, 4, 5, 6})});
  CHECK(!so7::complement_search(c4, c2).has_value());

  // Degenerate ends: over the whole group, and over the trivial subgroup.
  auto whole = so7::complement_search(s4, s4);
  REQUIRE(whole.has_value());
  CHECK(whole->order() == 1);
  auto none = so7::complement_search(s4, Group::trivial());
  REQUIRE(none.has_value());
  CHECK(none->same_elements(s4));

  CHECK_THROWS_AS(so7::complement_search(so7::s7_perm_group(),
                                         Group::generate({so7::alpha()})),
                  so7::Error);
}

TEST_CASE("complement kernels agree") {
  Group g = so7::named_group("case3-z7");
  Group a64 = Group::from_elements(
      [] {
        std::vector<SignedPerm> es;
        for (const SignedPerm& d : so7::diag_group(so7::code_a64()))
          es.push_back(d);
        return es;
      }(),
      {});
  std::vector<SignedPerm> hints = so7::nondiagonal_generators(g);
  auto serial = so7::complement_search_serial(g, a64, hints);
  auto parallel = so7::complement_search_parallel(g, a64, hints);
  REQUIRE(serial.has_value());
  REQUIRE(parallel.has_value());
  CHECK(serial->same_elements(*parallel));
  CHECK(serial->generators() == parallel->generators());
  CHECK(serial->order() == 7);

  Group ns = so7::named_group("case2-psl32-nonsplit");
  Group a8 = Group::from_elements(
      [] {
        std::vector<SignedPerm> es;
        for (const SignedPerm& d : so7::diag_group(so7::code_a8()))
          es.push_back(d);
        return es;
      }(),
      {});
  std::vector<SignedPerm> ns_hints = so7::nondiagonal_generators(ns);
  CHECK(!so7::complement_search_serial(ns, a8, ns_hints).has_value());
  CHECK(!so7::complement_search_parallel(ns, a8, ns_hints).has_value());
}
