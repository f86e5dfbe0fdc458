#include "doctest.h"

#include "greenfn/errors.hpp"
#include "greenfn/solver.hpp"
#include "test_support.hpp"

using namespace greenfn;
using greenfn::testing::rq;

namespace {
GroupSpec spec(GroupKind k, int n, FrobeniusKind f = FrobeniusKind::Split) {
  GroupSpec s;
  s.kind = k;
  s.n = n;
  s.frobenius = f;
  return s;
}

RatMatrix neg_q(const RatMatrix& m) {
  RatMatrix r = m;
  for (auto& row : r) {
    for (auto& x : row) x = x.substitute_neg_q();
  }
  return r;
}

RatMatrix conj_sign(const RatMatrix& m, const std::vector<SpringerDatum>& data) {
  RatMatrix r = m;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if ((data[i].delta + data[j].delta) % 2 != 0) r[i][j] = -r[i][j];
    }
  }
  return r;
}

nlohmann::json gl2_document() {
  return nlohmann::json::parse(R"({
    "schema": "omega-system/v1",
    "series": "GL2 d=1",
    "indices": [{"label": "1,1", "dim_C": 0, "block": 0}, {"label": "2", "dim_C": 2, "block": 1}],
    "omega": [["1", "1"], ["1", "q^2"]]
  })");
}
}  // namespace

TEST_CASE("omega_matrix examples") {
  OmegaSystem g1 = omega_matrix(spec(GroupKind::GL, 1), {1, 1, true});
  CHECK(g1.omega == RatMatrix{{RatQ(1)}});
  OmegaSystem g2 = omega_matrix(spec(GroupKind::GL, 2), {1, 1, false});
  CHECK(g2.indices[0].label == "1,1");
  CHECK(g2.indices[1].label == "2");
  CHECK(g2.omega == RatMatrix{{RatQ(1), RatQ(1)}, {RatQ(1), rq("q^2")}});
  OmegaSystem s2 = omega_matrix(spec(GroupKind::SL, 2), {1, 1, false});
  OmegaSystem u2 = omega_matrix(spec(GroupKind::SL, 2, FrobeniusKind::NonSplit), {1, 1, false});
  CHECK(u2.omega == neg_q(s2.omega));
}

TEST_CASE("solve examples") {
  OmegaSystem id;
  id.series = "id";
  id.indices = {{"a", 0, 0}, {"b", 1, 1}, {"c", 2, 2}};
  id.omega = identity_matrix(3);
  OmegaSystem sid = solve(id);
  CHECK(*sid.P == identity_matrix(3));
  CHECK(*sid.Lambda == identity_matrix(3));

  OmegaSystem g2 = solve(omega_matrix(spec(GroupKind::GL, 2), {1, 1, false}));
  CHECK(*g2.P == RatMatrix{{RatQ(1), RatQ(1)}, {RatQ(0), RatQ(1)}});
  CHECK(*g2.Lambda == RatMatrix{{RatQ(1), RatQ(0)}, {RatQ(0), rq("q^2-1")}});

  OmegaSystem diag = id;
  diag.omega[0][0] = rq("q+1");
  diag.omega[1][1] = rq("-3");
  diag.omega[2][2] = rq("q^-1");
  OmegaSystem sd = solve(diag);
  CHECK(*sd.P == identity_matrix(3));
  CHECK(*sd.Lambda == diag.omega);

  OmegaSystem singular = id;
  singular.omega[1][1] = RatQ(0);
  CHECK_THROWS_WITH_AS(solve(singular), doctest::Contains("non-singular block-diagonal violated"), ValidationError);
}

TEST_CASE("all type A systems solve with integral polynomial entries") {
  for (int n = 1; n <= 6; ++n) {
    for (GroupKind k : {GroupKind::GL, GroupKind::SL}) {
      for (FrobeniusKind f : {FrobeniusKind::Split, FrobeniusKind::NonSplit}) {
        GroupSpec s = spec(k, n, f);
        for (const auto& ser : enumerate_series(k, n, 0)) {
          OmegaSystem sys = solve(omega_matrix(s, ser));
          CHECK(satisfies_equation(sys));
          CHECK_NOTHROW(check_integrality(sys));
          CHECK(transpose(sys.omega) == sys.omega);
          for (auto [b, e] : block_ranges(sys)) CHECK(e == b + 1);
          for (std::size_t i = 0; i < sys.P->size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) CHECK((*sys.P)[i][j].is_zero());
            CHECK((*sys.P)[i][i] == RatQ(1));
          }
        }
      }
    }
  }
}

TEST_CASE("Ennola transport of P and Lambda") {
  for (int n = 1; n <= 6; ++n) {
    for (GroupKind k : {GroupKind::GL, GroupKind::SL}) {
      for (const auto& ser : enumerate_series(k, n, 0)) {
        OmegaSystem a = solve(omega_matrix(spec(k, n), ser));
        OmegaSystem b = solve(omega_matrix(spec(k, n, FrobeniusKind::NonSplit), ser));
        CHECK(conj_sign(b.omega, b.data) == neg_q(a.omega));
        CHECK(conj_sign(*b.P, b.data) == neg_q(*a.P));
        CHECK(conj_sign(*b.Lambda, b.data) == neg_q(*a.Lambda));
      }
    }
  }
}

TEST_CASE("perturbing P breaks block diagonality") {
  OmegaSystem sys = solve(omega_matrix(spec(GroupKind::GL, 4), {1, 1, false}));
  std::size_t k = sys.omega.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      RatMatrix p = *sys.P;
      p[i][j] += RatQ(1);
      RatMatrix pinv = inverse(p);
      RatMatrix lam = multiply(multiply(transpose(pinv), sys.omega), pinv);
      bool diagonal = true;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (a != b && !lam[a][b].is_zero()) diagonal = false;
        }
      }
      CHECK_FALSE(diagonal);
    }
  }
}

TEST_CASE("external systems with genuine blocks") {
  auto g = greenfn::testing::rng("external-blocks");
  for (int t = 0; t < 20; ++t) {
    // blocks {0}, {1,2}, {3}
    RatMatrix P = identity_matrix(4);
    for (std::size_t j : {1u, 2u, 3u}) P[0][j] = greenfn::testing::random_ratq(g);
    P[1][3] = greenfn::testing::random_ratq(g);
    P[2][3] = greenfn::testing::random_ratq(g);
    RatMatrix L(4, std::vector<RatQ>(4));
    L[0][0] = rq("q+2");
    L[1][1] = greenfn::testing::random_ratq(g);
    L[1][2] = L[2][1] = greenfn::testing::random_ratq(g);
    L[2][2] = greenfn::testing::random_ratq(g);
    L[3][3] = rq("q^2");
    if ((L[1][1] * L[2][2] - L[1][2] * L[2][1]).is_zero()) continue;
    OmegaSystem sys;
    sys.series = "external";
    sys.indices = {{"a", 0, 0}, {"b", 2, 1}, {"c", 2, 1}, {"d", 4, 2}};
    sys.omega = multiply(multiply(transpose(P), L), P);
    OmegaSystem loaded = load_external_system(to_json(sys));
    OmegaSystem solved = solve(loaded);
    CHECK(*solved.P == P);
    CHECK(*solved.Lambda == L);
  }
}

TEST_CASE("load_external_system") {
  OmegaSystem direct = solve(omega_matrix(spec(GroupKind::GL, 3), {1, 1, false}));
  nlohmann::json doc = to_json(omega_matrix(spec(GroupKind::GL, 3), {1, 1, false}));
  OmegaSystem round = solve(load_external_system(nlohmann::json::parse(doc.dump())));
  CHECK(round.omega == direct.omega);
  CHECK(*round.P == *direct.P);
  CHECK(*round.Lambda == *direct.Lambda);
  CHECK(to_json(round)["P"] == to_json(direct)["P"]);

  CHECK_NOTHROW(load_external_system(gl2_document()));
  nlohmann::json asym = gl2_document();
  asym["omega"][0][1] = "2";
  CHECK_THROWS_WITH_AS(load_external_system(asym), doctest::Contains("symmetric"), ValidationError);
  nlohmann::json empty = gl2_document();
  empty["indices"] = nlohmann::json::array();
  CHECK_THROWS_AS(load_external_system(empty), ValidationError);
  nlohmann::json unordered = gl2_document();
  unordered["indices"][0]["dim_C"] = 4;
  CHECK_THROWS_WITH_AS(load_external_system(unordered), doctest::Contains("increasing"), ValidationError);
  nlohmann::json split = gl2_document();
  split["indices"][1]["block"] = 0;
  CHECK_THROWS_AS(load_external_system(split), ValidationError);
  nlohmann::json bad = gl2_document();
  bad["omega"][1][1] = "q^";
  CHECK_THROWS_AS(load_external_system(bad), ValidationError);
  nlohmann::json missing = gl2_document();
  missing.erase("omega");
  CHECK_THROWS_AS(load_external_system(missing), ValidationError);
  nlohmann::json schema = gl2_document();
  schema["schema"] = "omega-system/v2";
  CHECK_THROWS_AS(load_external_system(schema), ValidationError);
  CHECK_THROWS_AS(load_external_system(nlohmann::json::array()), ValidationError);
}

TEST_CASE("matrix helpers") {
  RatMatrix a{{rq("q"), RatQ(1)}, {RatQ(0), rq("q")}};
  CHECK(multiply(a, inverse(a)) == identity_matrix(2));
  CHECK_THROWS_AS(inverse(RatMatrix{{RatQ(1), RatQ(1)}, {RatQ(1), RatQ(1)}}), ValidationError);
  CHECK_THROWS_AS(multiply(a, RatMatrix{{RatQ(1)}}), ValidationError);
}
