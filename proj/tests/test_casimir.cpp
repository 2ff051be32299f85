#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kc/casimir.hpp"
#include "test_util.hpp"

using namespace kc;

TEST_CASE("K1 construction pins the printed X^2 coefficient") {
  // at n=3 the X^2 coefficient 4-(n-3)(n-1) equals 4
  const int n = 3;
  ModelParams params(n);
  DiffOp y1 = build_Y(1, params), x = build_X(params), h = build_H(params),
         z = build_Z(1, params);
  DiffOp c1 = commutator(y1, x);
  FieldElem g = FieldElem::gamma(n);
  DiffOp central = DiffOp::mult(g * g).times(Rat(-2)) - h.times(Rat(4)) - (h * z).times(Rat(4));
  DiffOp expect = c1 * c1 + anticommutator(y1, x * x).times(Rat(2)) +
                  (y1 * central).times(Rat(2)) + (h * (y1 * y1)).times(Rat(8)) +
                  (x * x).times(Rat(4));
  CHECK(build_K1(n) == expect);
}

TEST_CASE("K1 is central for n=2 and n=3") {
  for (int n : {2, 3}) {
    for (const auto& r : verify_K1_centrality(n)) CHECK(r.pass);
  }
}

TEST_CASE("K1 central form holds, including the Z0 convention at n=2") {
  for (int n : {2, 3}) {
    auto r = verify_K1_central_form(n);
    CHECK(r.pass);
    CHECK(r.residual_terms == 0);
  }
  // n=3: all (n-3) factors vanish, so K1 = -4 gamma^2 Z1
  const int n = 3;
  ModelParams params(n);
  FieldElem g = FieldElem::gamma(n);
  CHECK(k1_central_form(n) == (DiffOp::mult(g * g) * build_Z(1, params)).times(Rat(-4)));
}

TEST_CASE("printed K_i at (3,2) is not central; corrected Casimir matches central form") {
  KiResolution res = resolve_Ki(3, 2);
  CHECK(!res.printed_central);
  REQUIRE(res.resolved);
  CHECK(!res.corrected_table.empty());

  for (const auto& r : verify_Ki_centrality(3, 2, &res)) {
    CHECK(r.pass);
    CHECK(r.detail.find("corrected Casimir") != std::string::npos);
  }
  auto form = verify_Ki_central_form(3, 2, false, &res);
  CHECK(form.pass);
  CHECK(form.detail == "corrected Casimir equals printed central form");
}

TEST_CASE("Y_n = 0 convention flows through the (n=3, i=2) central form") {
  // ki_central_form at i = n-1 only involves Y1, Z_{i-2}, beta_i
  const int n = 3, i = 2;
  DiffOp form = ki_central_form(n, i);
  CHECK(!form.is_zero());
  ModelParams params(n);
  // it must be central trivially: built from commuting centrals
  CHECK(commutator(form, build_Z(i - 1, params)).is_zero());
  CHECK(commutator(form, build_Y(i, params)).is_zero());
}

TEST_CASE("casimir fit reproduces K1 for the first sub-structure") {
  // the same undetermined-coefficients construction applied to sub-structure 1
  // recovers an operator equal to the printed central form
  const int n = 3;
  ModelParams params(n);
  DiffOp y1 = build_Y(1, params), x = build_X(params);
  DiffOp c1 = commutator(y1, x);
  CasimirFit fit = fit_casimir(c1 * c1, "Y1", y1, "X", x,
                               {{"H", build_H(params)}, {"Z1", build_Z(1, params)}}, n,
                               {VarLayout(n).gamma()});
  REQUIRE(fit.found);
  CHECK((fit.casimir - k1_central_form(n)).is_zero());
}
