#include "doctest.h"

#include "greenfn/errors.hpp"
#include "greenfn/oracle.hpp"
#include "greenfn/reductive.hpp"
#include "test_support.hpp"

using namespace greenfn;
using greenfn::testing::rq;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
GroupSpec spec(GroupKind k, int n, FrobeniusKind f = FrobeniusKind::Split) {
  GroupSpec s;
  s.kind = k;
  s.n = n;
  s.frobenius = f;
  return s;
}
}  // namespace

TEST_CASE("group_order examples") {
  CHECK(group_order(spec(GroupKind::GL, 1)) == rq("q-1"));
  RatQ gl2 = group_order(spec(GroupKind::GL, 2));
  CHECK(gl2 == rq("q") * rq("q-1") * rq("q^2-1"));
  CHECK(gl2.evaluate(2) == brute_group_order(GroupKind::GL, 2, 2));
  CHECK(gl2.evaluate(3) == brute_group_order(GroupKind::GL, 2, 3));
  CHECK(gl2.evaluate(4) == brute_group_order(GroupKind::GL, 2, 4));
  CHECK(brute_group_order(GroupKind::GL, 2, 2) == 6);
  CHECK(brute_group_order(GroupKind::GL, 2, 3) == 48);
  CHECK(brute_group_order(GroupKind::GL, 2, 4) == 180);
  CHECK(group_order(spec(GroupKind::SL, 2, FrobeniusKind::NonSplit)) == rq("q^3-q"));
  CHECK(group_order(spec(GroupKind::SL, 3)).evaluate(2) == brute_group_order(GroupKind::SL, 3, 2));
}

TEST_CASE("non-split orders are the split orders at -q") {
  for (int n = 1; n <= 10; ++n) {
    RatQ split = group_order(spec(GroupKind::SL, n));
    RatQ twisted = group_order(spec(GroupKind::SL, n, FrobeniusKind::NonSplit));
    RatQ sign = n % 2 == 1 ? RatQ(1) : RatQ(-1);
    CHECK(twisted == sign * split.substitute_neg_q());
  }
}

TEST_CASE("twisted_torus_order examples") {
  CHECK(twisted_torus_order({{1}}) == rq("q-1"));
  CHECK(twisted_torus_order({{-1}}) == rq("q+1"));
  for (int r = 1; r <= 6; ++r) {
    IntMatrix A(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) A[static_cast<std::size_t>((i + 1) % r)][static_cast<std::size_t>(i)] = 1;
    CHECK(twisted_torus_order(A) == RatQ(LaurentPoly::monomial(r) - LaurentPoly(1)));
  }
  CHECK_THROWS_AS(twisted_torus_order({{1, 0}}), ValidationError);
}

TEST_CASE("levi_torus_order examples") {
  for (int n = 1; n <= 5; ++n) {
    RatQ t = levi_torus_order(spec(GroupKind::GL, n), levi_for(n, 1), Partition::single_column(n));
    RatQ expect(1);
    for (int i = 0; i < n; ++i) expect *= rq("q-1");
    CHECK(t == expect);
  }
  for (int d : {1, 2, 3}) {
    for (int m = 1; m <= 3; ++m) {
      RatQ t = levi_torus_order(spec(GroupKind::GL, d * m), levi_for(d * m, d), Partition::single_row(m));
      CHECK(t == RatQ(LaurentPoly::monomial(m) - LaurentPoly(1)));
    }
  }
  for (int n = 2; n <= 3; ++n) {
    RatQ t = levi_torus_order(spec(GroupKind::SL, n), levi_for(n, 1), Partition::single_column(n));
    RatQ expect(1);
    for (int i = 1; i < n; ++i) expect *= rq("q-1");
    CHECK(t == expect);
    for (int q : {2, 3}) {
      long diag = 1;
      for (int i = 1; i < n; ++i) diag *= q - 1;
      CHECK(t.evaluate(q) == diag);
    }
  }
  CHECK_THROWS_AS(levi_torus_order(spec(GroupKind::GL, 4), levi_for(4, 2), P({2, 1})), ValidationError);
}

TEST_CASE("GL Levi torus orders follow the cycle structure") {
  for (int m = 1; m <= 6; ++m) {
    GroupSpec s = spec(GroupKind::GL, m);
    for (const auto& w : all_permutations(m)) {
      Partition rho = cycle_type(w);
      RatQ expect(1);
      for (int c : rho.parts()) expect *= RatQ(LaurentPoly::monomial(c) - LaurentPoly(1));
      CHECK(levi_torus_order(s, levi_for(m, 1), w) == expect);
      CHECK(levi_torus_order(s, levi_for(m, 1), rho) == expect);
    }
  }
}

TEST_CASE("torus orders divide the group order") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (GroupKind k : {GroupKind::GL, GroupKind::SL}) {
        GroupSpec s = spec(k, n);
        LeviSpec levi = levi_for(n, d);
        for (const auto& rho : partitions_of(levi.m)) {
          CHECK((group_order(s) / levi_torus_order(s, levi, rho)).is_polynomial());
        }
      }
    }
  }
}

TEST_CASE("a0_r examples") {
  for (int n = 1; n <= 6; ++n) {
    GroupSpec s = spec(GroupKind::GL, n);
    CHECK(a0_r(s, levi_for(n, 1), Partition::single_row(n)).a0_plus_r == 0);
    CHECK(a0_r(s, levi_for(n, 1), Partition::single_column(n)).a0_plus_r == n * (n - 1));
  }
  A0R x = a0_r(spec(GroupKind::GL, 4), levi_for(4, 2), P({2, 2}));
  std::vector<std::pair<long, mpq_class>> pts;
  for (int q : {2, 3, 4}) pts.emplace_back(q, mpq_class(count_flags(4, q, P({2, 2}), 2)));
  Interpolation fit = interpolate_counts(pts);
  CHECK(x.a0_plus_r == 2 * fit.degree);
  CHECK_THROWS_AS(a0_r(spec(GroupKind::GL, 4), levi_for(4, 2), P({3, 1})), ValidationError);
}

TEST_CASE("a0 + r is even") {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (GroupKind k : {GroupKind::GL, GroupKind::SL}) {
        for (const auto& l : partitions_of(n)) {
          if (!d_quotient(l, d)) continue;
          CHECK(a0_r(spec(k, n), levi_for(n, d), l).a0_plus_r % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("centralizer orders match brute force") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& l : partitions_of(n)) {
      RatQ z = centralizer_order(spec(GroupKind::GL, n), l);
      for (int q : {2, 3}) CHECK(z.evaluate(q) == brute_centralizer(n, q, l));
    }
  }
  CHECK(brute_centralizer(2, 2, P({2})) == 2);
  CHECK(brute_centralizer(2, 3, P({2})) == 6);
}

TEST_CASE("group spec validation") {
  GroupSpec s = spec(GroupKind::GL, 0);
  CHECK_THROWS_AS(validate(s), ValidationError);
  s.n = 3;
  s.p = 4;
  CHECK_THROWS_AS(validate(s), ValidationError);
  CHECK(prime_to_p_part(12, 2) == 3);
  CHECK(prime_to_p_part(12, 0) == 12);
  CHECK_THROWS_AS(levi_for(4, 3), ValidationError);
}
