#include "doctest.h"
#include "test_support.hpp"

#include "greenfn/errors.hpp"
#include "greenfn/kostka.hpp"
#include "greenfn/solver.hpp"
#include "greenfn/verify.hpp"

using namespace greenfn;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

long kostka_number(const Partition& l, const Partition& m) {
  return static_cast<long>(semistandard_tableaux(l, m).size());
}
}  // namespace

TEST_CASE("semistandard tableaux") {
  CHECK(kostka_number(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(kostka_number(P({3, 2, 1}), P({1, 1, 1, 1, 1, 1})) == 16);
  CHECK(kostka_number(P({2, 2}), P({3, 1})) == 0);
  CHECK(kostka_number(P({3, 1}), P({2, 1, 1})) == 2);
  auto t = semistandard_tableaux(P({2, 1}), P({2, 1}));
  REQUIRE(t.size() == 1);
  CHECK(t[0] == std::vector<std::vector<int>>{{1, 1}, {2}});
  CHECK(reading_word(t[0]) == std::vector<int>{2, 1, 1});
  CHECK_THROWS_AS(semistandard_tableaux(P({2}), P({1})), ValidationError);
}

TEST_CASE("charge") {
  CHECK(charge({1, 2}) == 1);
  CHECK(charge({2, 1}) == 0);
  CHECK(charge({1, 2, 3}) == 3);
  CHECK(charge({3, 2, 1}) == 0);
  CHECK(charge({2, 1, 1}) == 0);
  CHECK_THROWS_AS(charge({2, 2}), ValidationError);
}

TEST_CASE("Kostka-Foulkes values") {
  CHECK(kostka_foulkes(P({2, 1}), P({1, 1, 1})) == LaurentPoly::parse("q^2 + q"));
  CHECK(kostka_foulkes(P({3, 1}), P({2, 1, 1})) == LaurentPoly::parse("q^2 + q"));
  CHECK(kostka_foulkes(P({2, 2}), P({2, 1, 1})) == LaurentPoly::parse("q"));
  CHECK(kostka_foulkes(P({2, 2}), P({3, 1})) == LaurentPoly());
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(kostka_foulkes(l, l) == LaurentPoly(1));
      CHECK(kostka_foulkes(Partition::single_row(n), l) == LaurentPoly::monomial(n_invariant(l)));
      LaurentPoly k = kostka_foulkes(l, Partition::single_column(n));
      CHECK(k.evaluate(1) == kostka_number(l, Partition::single_column(n)));
      for (const auto& m : partitions_of(n)) {
        if (!dominates(l, m)) CHECK(kostka_foulkes(l, m).is_zero());
        CHECK(kostka_foulkes(l, m).evaluate(1) == kostka_number(l, m));
      }
    }
  }
}

TEST_CASE("exactly one normalization matches the principal series") {
  auto small = kostka_matching_conventions(3);
  REQUIRE(small.size() == 1);
  CHECK(small.front() == "q^(n(row)-n(col)) K[col,row](1/q)");
  CHECK(kostka_matching_conventions(6) == small);
}
