#include "doctest.h"
#include "test_support.hpp"

#include "greenfn/errors.hpp"
#include "greenfn/partition.hpp"

using namespace greenfn;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(P({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition::parse("3,1").to_string() == "3,1");
  CHECK(Partition::parse(" 2, 2 ,1").size() == 5);
  CHECK(P({2, 2, 1}).multiplicity(2) == 2);
  CHECK_THROWS_AS(P({2, 0}), ValidationError);
  CHECK_THROWS_AS(Partition::parse("3,,1"), ValidationError);
  CHECK_THROWS_AS(Partition::parse("x"), ValidationError);
  CHECK_THROWS_AS(Partition::parse(""), ValidationError);
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(4).front() == Partition::single_row(4));
  CHECK(partitions_of(4).back() == Partition::single_column(4));
}

TEST_CASE("transpose examples") {
  CHECK(transpose(P({2, 1})) == P({2, 1}));
  CHECK(transpose(Partition::single_row(5)) == Partition::single_column(5));
  CHECK(transpose(P({3, 1})) == P({2, 1, 1}));
}

TEST_CASE("n_invariant examples") {
  CHECK(n_invariant(Partition::single_row(6)) == 0);
  CHECK(n_invariant(Partition::single_column(6)) == 15);
  CHECK(n_invariant(P({2, 1})) == 1);
}

TEST_CASE("class_dims examples") {
  for (int n = 1; n <= 6; ++n) {
    ClassDims reg = class_dims(n, Partition::single_row(n), GroupKind::GL);
    CHECK(reg.dim_C == n * n - n);
    CHECK(reg.d_u == 0);
    CHECK(class_dims(n, Partition::single_column(n), GroupKind::GL).dim_C == 0);
  }
  ClassDims c = class_dims(3, P({2, 1}), GroupKind::GL);
  CHECK(c.dim_Z_of_u == 5);
  CHECK(c.dim_C == 4);
  CHECK(c.d_u == 1);
  ClassDims s = class_dims(3, P({2, 1}), GroupKind::SL);
  CHECK(s.dim_C == 4);
  CHECK(s.dim_Z_of_u == 4);
  CHECK_THROWS_AS(class_dims(4, P({2, 1}), GroupKind::GL), ValidationError);
}

TEST_CASE("d_quotient examples") {
  CHECK(d_quotient(P({4, 2}), 2) == P({2, 1}));
  CHECK_FALSE(d_quotient(P({3, 1}), 2).has_value());
  CHECK(d_quotient(P({3, 3, 3}), 3) == P({1, 1, 1}));
  CHECK_THROWS_AS(d_quotient(P({2}), 0), ValidationError);
}

TEST_CASE("partition identities for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (const Partition& l : partitions_of(n)) {
      Partition t = transpose(l);
      CHECK(transpose(t) == l);
      int alt = 0;
      for (int c : t.parts()) alt += c * (c - 1) / 2;
      CHECK(n_invariant(l) == alt);
      ClassDims cd = class_dims(n, l, GroupKind::GL);
      CHECK(cd.dim_C + cd.dim_Z_of_u == n * n);
    }
  }
}

TEST_CASE("dominance is a partial order with extreme elements") {
  for (int n = 1; n <= 7; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      CHECK(dominates(Partition::single_row(n), a));
      CHECK(dominates(a, Partition::single_column(n)));
      for (const auto& b : ps) {
        if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
        for (const auto& c : ps) {
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
      }
    }
  }
  CHECK_FALSE(dominates(P({3, 1, 1, 1}), P({2, 2, 2})));
  CHECK_FALSE(dominates(P({2, 2, 2}), P({3, 1, 1, 1})));
}

TEST_CASE("block order is compatible with closure order") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : partitions_of(n)) {
      CHECK_FALSE(block_order_less(a, a));
      for (const auto& b : partitions_of(n)) {
        if (a != b && dominates(b, a)) CHECK(block_order_less(a, b));
      }
    }
  }
}

TEST_CASE("symmetric group helpers") {
  CHECK(factorial(5) == 120);
  CHECK(centralizer_size(P({2, 1})) == 2);
  CHECK(centralizer_size(P({1, 1, 1})) == 6);
}
