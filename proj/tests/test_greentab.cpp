#include "doctest.h"

#include <numeric>

#include "greenfn/errors.hpp"
#include "greenfn/greentab.hpp"
#include "greenfn/oracle.hpp"
#include "test_support.hpp"

using namespace greenfn;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
GroupSpec spec(GroupKind k, int n, FrobeniusKind f = FrobeniusKind::Split, int p = 0) {
  GroupSpec s;
  s.kind = k;
  s.n = n;
  s.frobenius = f;
  s.p = p;
  return s;
}
CycloPoly poly(const std::string& text, int order = 1) { return CycloPoly(order, LaurentPoly::parse(text)); }
std::size_t row_of(const GreenTable& t, const Partition& rho) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i] == rho) return i;
  }
  FAIL("row " << rho.to_string() << " missing");
  return 0;
}
std::size_t column_of(const GreenTable& t, const Partition& lambda, int twist = 0) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i].lambda == lambda && t.columns[i].twist == twist) return i;
  }
  FAIL("column " << lambda.to_string() << " missing");
  return 0;
}
}  // namespace

TEST_CASE("x_functions examples") {
  GroupSpec g2 = spec(GroupKind::GL, 2);
  SeriesLabel s{1, 1, false};
  OmegaSystem sys = solve(omega_matrix(g2, s));
  Y0Table y0 = y0_table(g2, s, 0);
  auto gam = gamma_values(g2, s, sys.data, {});
  CycloMatrix x = x_functions(sys, y0, gam);
  CHECK(x[0] == std::vector<CycloPoly>{poly("1"), poly("0")});
  CHECK(x[1] == std::vector<CycloPoly>{poly("1"), poly("1")});

  OmegaSystem id = sys;
  id.P = identity_matrix(2);
  CycloMatrix xy = x_functions(id, y0, gam);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t c = 0; c < 2; ++c) CHECK(xy[i][c] == CycloPoly(y0.values[i][c], LaurentPoly(1)));
  }
  CHECK_THROWS_AS(x_functions(omega_matrix(g2, s), y0, gam), ValidationError);
  CHECK_THROWS_AS(x_functions(sys, y0, {gam[0]}), ValidationError);
}

TEST_CASE("gamma_values examples") {
  GroupSpec s4 = spec(GroupKind::SL, 4);
  SeriesLabel d2 = make_series(s4, 2);
  auto split = gamma_values(s4, d2, enumerate_block(s4, d2), {});
  for (const auto& g : split) CHECK(g == Cyclotomic(2, 1));

  GroupSpec u4 = spec(GroupKind::SL, 4, FrobeniusKind::NonSplit);
  auto data = enumerate_block(u4, d2);
  auto tw = gamma_values(u4, d2, data, {{P({2, 2}), 1}, {P({4}), 0}});
  REQUIRE(data.back().lambda == P({4}));
  CHECK(tw.back() == Cyclotomic(2, data.back().delta % 2 == 0 ? 1 : -1));
  CHECK(tw.front() == Cyclotomic(2, data.front().delta % 2 == 0 ? -1 : 1));
  CHECK_THROWS_WITH_AS(gamma_values(u4, d2, data, {{P({4}), 0}}), doctest::Contains("missing nu"), ValidationError);

  GroupSpec u3 = spec(GroupKind::SL, 3, FrobeniusKind::NonSplit);
  SeriesLabel d1{1, 1, false};
  NuInputs nu;
  for (const auto& l : partitions_of(3)) nu[l] = 0;
  for (const auto& g : gamma_values(u3, d1, enumerate_block(u3, d1), nu)) CHECK(g == Cyclotomic(1, 1));
}

TEST_CASE("green_table examples") {
  GreenTable t = green_table(spec(GroupKind::GL, 2), {1, 1, false}, 0, {});
  std::size_t w1 = row_of(t, P({1, 1}));
  CHECK(t.entries[w1][column_of(t, P({1, 1}))] == poly("q+1"));
  CHECK(t.entries[w1][column_of(t, P({2}))] == poly("1"));
  CHECK(t.entries[row_of(t, P({2}))][column_of(t, P({1, 1}))] == poly("1-q"));

  for (int n = 1; n <= 6; ++n) {
    GreenTable g = green_table(spec(GroupKind::GL, n), {1, 1, n == 1}, 0, {});
    CHECK(g.entries[row_of(g, Partition::single_column(n))][column_of(g, Partition::single_row(n))] == poly("1"));
  }

  GreenTable c = green_table(spec(GroupKind::SL, 3), {3, 1, true}, 1, {});
  REQUIRE(c.rows.size() == 1);
  REQUIRE(c.columns.size() == 3);
  Y0Table y0 = y0_table(spec(GroupKind::SL, 3), {3, 1, true}, 1);
  for (std::size_t k = 0; k < 3; ++k) CHECK(c.entries[0][k] == CycloPoly(y0.values[0][k], LaurentPoly(1)));
}

TEST_CASE("GL principal series matches flag counts") {
  for (int n = 1; n <= 4; ++n) {
    GreenTable t = green_table(spec(GroupKind::GL, n), {1, 1, n == 1}, 0, {});
    std::size_t w1 = row_of(t, Partition::single_column(n));
    for (const auto& l : partitions_of(n)) {
      const CycloPoly& e = t.entries[w1][column_of(t, l)];
      REQUIRE(e.is_rational());
      for (int q : {2, 3, 4, 5}) CHECK(e.rational_part().evaluate(q) == count_flags(n, q, l, 1));
    }
  }
}

TEST_CASE("identity row: degree, top coefficient and positivity") {
  for (int n = 1; n <= 6; ++n) {
    for (GroupKind k : {GroupKind::GL, GroupKind::SL}) {
      for (const auto& ser : enumerate_series(k, n, 0)) {
        GreenTable t = green_table(spec(k, n), ser, 1 % prime_to_p_part(k == GroupKind::GL ? 1 : n, 0), {});
        std::size_t w1 = row_of(t, Partition::single_column(n / ser.d));
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
          if (t.columns[c].twist != 0) continue;
          const Partition& l = t.columns[c].lambda;
          const CycloPoly& e = t.entries[w1][c];
          REQUIRE(e.is_rational());
          const LaurentPoly& f = e.rational_part();
          Partition mu = *d_quotient(l, ser.d);
          CHECK(f.degree() == n_invariant(l));
          CHECK(f.leading() == character_value(mu, Partition::single_column(mu.size())));
          if (ser.d == 1) {
            CHECK(f.low() >= 0);
            for (const auto& x : f.coeffs()) CHECK(x >= 0);
          }
        }
      }
    }
  }
}

TEST_CASE("twisted rows are Galois consistent") {
  for (int n = 2; n <= 6; ++n) {
    for (int qr = 1; qr < n; ++qr) {
      if (std::gcd(qr, n) != 1) continue;
      for (const auto& ser : enumerate_series(GroupKind::SL, n, 0)) {
        if ((qr - 1) % ser.d != 0) continue;
        CHECK(twisted_rows_consistent(green_table(spec(GroupKind::SL, n), ser, qr, {})));
      }
    }
  }
}

TEST_CASE("ennola_check examples") {
  auto run = [](GroupKind k, int n, int d, int qr, NuInputs nu) {
    SeriesLabel s = make_series(spec(k, n), d);
    if (nu.empty()) {
      for (const auto& x : enumerate_block(spec(k, n), s)) nu[x.lambda] = 0;
    }
    return ennola_check(k, n, 0, s, qr, nu);
  };
  CHECK(run(GroupKind::GL, 2, 1, 0, {}).passed());
  CHECK(run(GroupKind::SL, 2, 1, 1, {}).passed());
  EnnolaReport cusp = run(GroupKind::SL, 3, 3, 2, {});
  CHECK(cusp.passed());
  CHECK(cusp.items.size() == 4);
  CHECK(run(GroupKind::SL, 4, 2, 3, {}).passed());
  CHECK(run(GroupKind::SL, 4, 2, 3, {{P({2, 2}), 1}, {P({4}), 0}}).passed());
}

TEST_CASE("exports") {
  GreenTable t = green_table(spec(GroupKind::GL, 2), {1, 1, false}, 0, {});
  std::string csv = to_csv(t);
  CHECK(csv.rfind("w,\"1,1|0\",\"2|0\"\n", 0) == 0);
  CHECK(csv.find("\"(1*q^1 + 1*q^0)/(1*q^0)\"") != std::string::npos);
  nlohmann::json j = to_json(t);
  CHECK(j["columns"].size() == 2);
  CHECK(j["entries"].size() == j["rows"].size());
}
