#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "so7/atlas.hpp"
#include "so7/error.hpp"
#include "so7/gf2.hpp"
#include "so7/group.hpp"
#include "so7/quotient.hpp"
#include "so7/subgroups.hpp"

using so7::Group;
using so7::QuotientGroup;
using so7::SignedPerm;

namespace {

Group diag_group_of(const so7::Gf2Code& code) {
  std::vector<SignedPerm> elems;
  for (const SignedPerm& d : so7::diag_group(code)) elems.push_back(d);
  return Group::from_elements(std::move(elems), {});
}

}  // namespace

TEST_CASE("normality") {
  Group s7 = so7::s7_perm_group();
  Group a7 = so7::derived_subgroup(s7);
  Group c7 = Group::generate({so7::alpha()});
  CHECK(so7::is_normal(s7, a7));
  CHECK(!so7::is_normal(s7, c7));
  CHECK(so7::is_normal(c7, c7));
  CHECK(!so7::is_normal(c7, s7));
}

TEST_CASE("quotient by the diagonal part recovers the permutation quotient") {
  Group g = so7::named_group("case2-z7");
  QuotientGroup q(g, diag_group_of(so7::code_a8()));
  CHECK(q.order() == 7);
  CHECK(q.class_count() == 7);
  CHECK(q.rep(0) == SignedPerm::identity());

  Group h = so7::named_group("case3-s7");
  QuotientGroup r(h, diag_group_of(so7::code_a64()));
  CHECK(r.order() == 5040);
  CHECK(r.class_count() == 15);
}

TEST_CASE("table is a group") {
  Group g = so7::named_group("case3-f42");
  QuotientGroup q(g, diag_group_of(so7::code_a64()));
  const size_t m = q.order();
  CHECK(m == 42);

  // Identity row and column, inverses, and the latin-square property.
  for (uint16_t a = 0; a < m; ++a) {
    CHECK(q.mul(0, a) == a);
    CHECK(q.mul(a, 0) == a);
    CHECK(q.mul(a, q.inv(a)) == 0);
    CHECK(q.mul(q.inv(a), a) == 0);
    std::vector<char> row(m, 0), col(m, 0);
    for (uint16_t b = 0; b < m; ++b) {
      row[q.mul(a, b)] = 1;
      col[q.mul(b, a)] = 1;
    }
    CHECK(std::count(row.begin(), row.end(), 1) == long(m));
    CHECK(std::count(col.begin(), col.end(), 1) == long(m));
  }

  // Labels respect multiplication of representatives.
  for (uint16_t a = 0; a < m; ++a)
    for (uint16_t b = 0; b < m; ++b)
      CHECK(q.mul(a, b) == q.label(q.rep(a) * q.rep(b)));

  // Generator labels generate: BFS from 0 reaches every coset.
  std::vector<char> seen(m, 0);
  seen[0] = 1;
  std::vector<uint16_t> queue{0};
  for (size_t head = 0; head < queue.size(); ++head)
    for (uint16_t gl : q.generator_labels()) {
      uint16_t y = q.mul(queue[head], gl);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  CHECK(queue.size() == m);
}

TEST_CASE("quotient classes partition the representatives") {
  Group g = so7::named_group("case3-d14");
  QuotientGroup q(g, diag_group_of(so7::code_a64()));
  CHECK(q.order() == 14);
  so7::ClassPartition cp = so7::quotient_classes(q);
  CHECK(cp.count() == q.class_count());
  CHECK(cp.count() == 5);  // dihedral of order 14
  size_t total = 0;
  for (const auto& cls : cp.classes) total += cls.size();
  CHECK(total == 14);
  std::vector<size_t> sizes = cp.sizes_sorted();
  std::vector<size_t> table_sizes = q.class_sizes();
  std::sort(table_sizes.begin(), table_sizes.end());
  CHECK(sizes == table_sizes);
}

TEST_CASE("table-free count matches the table") {
  Group n8 = diag_group_of(so7::code_a8());
  Group n64 = diag_group_of(so7::code_a64());
  for (const char* id : {"case2-f21", "case2-psl32-split"}) {
    Group g = so7::named_group(id);
    QuotientGroup q(g, n8);
    CHECK(so7::quotient_class_count(g, n8) == q.class_count());
  }
  for (const char* id : {"case3-f21", "case3-psl32"}) {
    Group g = so7::named_group(id);
    QuotientGroup q(g, n64);
    CHECK(so7::quotient_class_count(g, n64) == q.class_count());
  }
  // Quotient by the whole group and by the trivial subgroup.
  Group g = so7::named_group("case2-z7");
  CHECK(so7::quotient_class_count(g, g) == 1);
  CHECK(so7::quotient_class_count(g, Group::trivial()) == 8);
}

TEST_CASE("rejects bad inputs") {
  Group s7 = so7::s7_perm_group();
  Group c7 = Group::generate({so7::alpha()});
  CHECK_THROWS_AS(QuotientGroup(s7, c7), so7::Error);
  CHECK_THROWS_AS(so7::quotient_class_count(s7, c7), so7::Error);
  // Index 322560 blows the uint16 coset table.
  Group w = so7::named_group("case3-s7+neg");
  CHECK_THROWS_AS(QuotientGroup(w, Group::trivial()), so7::Error);
}
