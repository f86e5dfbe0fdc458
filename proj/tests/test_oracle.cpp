#include "doctest.h"

#include <numeric>

#include "greenfn/errors.hpp"
#include "greenfn/finite_field.hpp"
#include "greenfn/oracle.hpp"
#include "greenfn/reductive.hpp"
#include "test_support.hpp"

using namespace greenfn;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
std::vector<std::pair<long, mpq_class>> counts(int n, const Partition& l, int d, std::vector<int> qs) {
  std::vector<std::pair<long, mpq_class>> out;
  for (int q : qs) out.emplace_back(q, mpq_class(count_flags(n, q, l, d)));
  return out;
}
}  // namespace

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 8, 9, 25, 27}) {
    FiniteField F(q);
    CHECK(F.order() == q);
    int g = F.primitive_element();
    CHECK(F.pow(g, q - 1) == 1);
    for (int e = 1; e < q - 1; ++e) CHECK(F.pow(g, e) != 1);
    for (int a = 1; a < q; ++a) {
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(g, F.log(a)) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
    }
  }
  FiniteField F4(4);
  CHECK(F4.characteristic() == 2);
  CHECK(F4.degree() == 2);
  CHECK(F4.add(1, 1) == 0);
  CHECK_THROWS_AS(FiniteField(6), ValidationError);
  CHECK_THROWS_AS(FiniteField(2048), ValidationError);
  CHECK_THROWS_AS(F4.inv(0), ValidationError);
}

TEST_CASE("finite field linear algebra") {
  FiniteField F(3);
  FMat A{{1, 2, 0}, {2, 1, 0}, {0, 0, 1}};
  CHECK(determinant(F, A) == 0);
  FMat N = nullspace(F, A);
  REQUIRE(N.size() == 1);
  CHECK(mat_vec(F, A, N[0]) == FVec{0, 0, 0});
  FMat B{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}};
  FVec x;
  REQUIRE(solve_linear(F, B, {2, 1, 1}, x));
  CHECK(mat_vec(F, B, x) == FVec{2, 1, 1});
  FMat basis = rref(F, {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
  CHECK(basis.size() == 2);
  CHECK(in_span(F, basis, {1, 2, 1}));
  CHECK_FALSE(in_span(F, basis, {0, 0, 1}));
  CHECK(subspace_key(basis) == subspace_key(rref(F, {{1, 2, 1}, {0, 1, 1}})));
}

TEST_CASE("count_flags examples") {
  CHECK(count_flags(3, 2, P({2, 1}), 1) == 5);
  for (int q : {2, 3, 4}) CHECK(count_flags(2, q, P({1, 1}), 1) == q + 1);
  for (int q : {2, 3, 4, 5}) CHECK(count_flags(4, q, P({4}), 1) == 1);
  for (int q : {2, 3}) CHECK(count_flags(3, q, P({1, 1, 1}), 1) == (q + 1) * (q * q + q + 1));
  CHECK(count_flags(4, 2, P({2, 2}), 2) == 6);
  CHECK_THROWS_AS(count_flags(4, 2, P({3, 1}), 2), ValidationError);
  CHECK_THROWS_AS(count_flags(4, 2, P({2, 1}), 1), ValidationError);
}

TEST_CASE("interpolate_counts") {
  Interpolation a = interpolate_counts(counts(3, P({2, 1}), 1, {2, 3, 4}));
  CHECK(a.poly == LaurentPoly::parse("2*q + 1"));
  CHECK(a.degree == 1);
  CHECK(a.paving_ok());
  Interpolation b = interpolate_counts(counts(4, P({2, 2}), 2, {2, 3, 4, 5}), 2);
  CHECK(b.poly == LaurentPoly::parse("q^2 + q"));
  CHECK(b.degree_matches);
  Interpolation c = interpolate_counts({{2, 11}, {3, 25}, {4, 45}});
  CHECK(c.poly == LaurentPoly::parse("3*q^2 - q + 1"));
  CHECK_FALSE(c.nonnegative);
  CHECK_FALSE(c.paving_ok());
  Interpolation d = interpolate_counts({{2, mpq_class(1, 2)}, {3, 1}});
  CHECK_FALSE(d.integral);
  Interpolation e = interpolate_counts({{2, 5}, {3, 7}, {4, 9}}, 2);
  CHECK_FALSE(e.degree_matches);
  CHECK_THROWS_AS(interpolate_counts({}), ValidationError);
  CHECK_THROWS_AS(interpolate_counts({{2, 1}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(interpolate_counts({{2, 1}, {3, 1}}, 2), ValidationError);
}

TEST_CASE("brute force group data") {
  CHECK(brute_centralizer(2, 2, P({2})) == 2);
  CHECK(brute_centralizer(2, 3, P({2})) == 6);
  CHECK(brute_centralizer(3, 2, P({1, 1, 1})) == 168);
  CHECK(brute_centralizer(3, 2, P({2, 1})) == 8);
  CHECK(brute_centralizer(3, 3, P({2, 1})) == 108);
  GroupSpec gl3;
  gl3.n = 3;
  RatQ z = centralizer_order(gl3, P({2, 1}));
  CHECK(z.num().degree() == class_dims(3, P({2, 1}), GroupKind::GL).dim_Z_of_u);
  CHECK(brute_group_order(GroupKind::SL, 2, 3) == 24);
  CHECK(jordan_nilpotent(P({2, 1}))[0][1] == 1);
}

TEST_CASE("polytabloid characters") {
  CHECK(brute_symmetric_character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(brute_symmetric_character(P({2, 2}), P({2, 2})) == 2);
  CHECK(brute_symmetric_character(P({2, 1}), P({3})) == -1);
  CHECK(brute_symmetric_character(P({3, 2}), P({1, 1, 1, 1, 1})) == 5);
  CHECK_THROWS_AS(brute_symmetric_character(P({3, 3}), P({6})), ValidationError);
  CHECK_THROWS_AS(brute_symmetric_character(P({2, 1}), P({2})), ValidationError);
}

TEST_CASE("c_lambda for the regular class") {
  for (int q : {3, 5}) {
    for (int n : {2, 3, 4}) {
      for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || (q + 1) % d != 0 || std::gcd(q, n) != 1) continue;
        CLambdaInput in;
        in.n = n;
        in.q = q;
        in.lambda = Partition::single_row(n);
        in.d = d;
        CLambdaResult r = compute_c_lambda(in);
        CHECK(r.c_residue == 0);
        CHECK(r.nu == Cyclotomic(d, 1));
        CHECK(r.standard_flag);
      }
    }
  }
}

TEST_CASE("c_lambda for (2,2) is a single class") {
  for (int q : {3, 5}) {
    CLambdaInput in;
    in.n = 4;
    in.q = q;
    in.lambda = P({2, 2});
    in.d = 2;
    in.histogram = true;
    CLambdaResult r = compute_c_lambda(in);
    CHECK(r.nu == Cyclotomic(2, -1));
    CHECK(r.histogram.size() == 1);
    long total = 0;
    for (auto [k, v] : r.histogram) total += v;
    CHECK(total == q * q + q);
  }
}

TEST_CASE("c_lambda validation") {
  CLambdaInput in;
  in.n = 4;
  in.q = 4;
  in.lambda = P({2, 2});
  in.d = 2;
  CHECK_THROWS_AS(compute_c_lambda(in), ValidationError);
  in.q = 5;
  in.form_signs = {1};
  CHECK_THROWS_AS(compute_c_lambda(in), ValidationError);
  in.form_signs = {1, 2};
  CHECK_THROWS_AS(compute_c_lambda(in), ValidationError);
  in.form_signs = {};
  in.d = 4;
  in.lambda = P({4});
  in.q = 5;
  CHECK_THROWS_AS(compute_c_lambda(in), ValidationError);
  in.xi_exponent = 2;
  in.q = 3;
  CHECK_THROWS_AS(compute_c_lambda(in), ValidationError);
}
