#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kc/errors.hpp"
#include "kc/integrals.hpp"
#include "test_util.hpp"

using namespace kc;

TEST_CASE("Hamiltonian for n=2 has the expected normal form") {
  const int n = 2;
  ModelParams params(n);
  DiffOp h = build_H(params);

  DiffOp expect(n);
  expect.add_term(Mono::var(0, 2), FieldElem::constant(n, Rat(-1, 2)));
  expect.add_term(Mono::var(1, 2), FieldElem::constant(n, Rat(-1, 2)));
  expect.add_term(Mono::one(), -(FieldElem::gamma(n) * FieldElem::inv_r(n)) +
                                   FieldElem::beta(n, 1) * FieldElem::x(n, 1, -2));
  CHECK(h == expect);

  CHECK(commutator(h, h).is_zero());

  // action on the constant function picks out the potential
  CHECK(h.apply(FieldElem::one(n)) ==
        -(FieldElem::gamma(n) * FieldElem::inv_r(n)) + FieldElem::beta(n, 1) * FieldElem::x(n, 1, -2));
}

TEST_CASE("boundary conventions") {
  for (int n : {2, 3, 4}) {
    ModelParams params(n);
    DiffOp z0 = build_Z(0, params);
    DiffOp expect(n);
    expect.add_term(Mono::one(), FieldElem::beta(n, 1).times(Rat(-2)));
    CHECK(z0 == expect);
    CHECK(build_Y(n, params).is_zero());
  }
  ModelParams p3(3);
  CHECK_THROWS_AS(build_Z(2, p3), IndexRange);
  CHECK_THROWS_AS(build_Y(0, p3), IndexRange);
  CHECK_THROWS_AS(build_Y(5, p3), IndexRange);
}

TEST_CASE("all integrals commute with H") {
  for (int n : {2, 3, 4}) {
    ModelParams params(n);
    DiffOp h = build_H(params);
    CHECK(commutator(build_X(params), h).is_zero());
    for (int l = 1; l <= n - 2; ++l) CHECK(commutator(build_Z(l, params), h).is_zero());
    for (int p = 1; p <= n - 1; ++p) CHECK(commutator(build_Y(p, params), h).is_zero());
  }
}

TEST_CASE("commuting-set relations among the integrals") {
  for (int n : {3, 4}) {
    ModelParams params(n);
    DiffOp x = build_X(params);
    std::vector<DiffOp> zs, ys;
    for (int l = 0; l <= n - 2; ++l) zs.push_back(build_Z(l, params));
    for (int p = 1; p <= n - 1; ++p) ys.push_back(build_Y(p, params));

    for (const auto& z : zs) CHECK(commutator(x, z).is_zero());
    for (std::size_t a = 0; a < zs.size(); ++a)
      for (std::size_t b = a + 1; b < zs.size(); ++b)
        CHECK(commutator(zs[a], zs[b]).is_zero());
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b)
        CHECK(commutator(ys[a], ys[b]).is_zero());
    for (const auto& z : zs) CHECK(commutator(ys[0], z).is_zero());
  }
}

TEST_CASE("second-order parts are transpose symmetric") {
  for (int n : {3, 4}) {
    ModelParams params(n);
    for (int l = 1; l <= n - 2; ++l) {
      DiffOp z = build_Z(l, params);
      CHECK(z.transpose().order_part(2) == z.order_part(2));
    }
    for (int p = 1; p <= n - 1; ++p) {
      DiffOp y = build_Y(p, params);
      CHECK(y.transpose().order_part(2) == y.order_part(2));
    }
  }
}

TEST_CASE("integral identities hold under the action oracle") {
  const int n = 3;
  ModelParams params(n);
  DiffOp h = build_H(params);
  DiffOp x = build_X(params);
  DiffOp hx = h * x, xh = x * h;
  testutil::Rng rng(71u);
  for (int it = 0; it < 5; ++it) {
    FieldElem f = rng.field_elem(n);
    CHECK(hx.apply(f) == h.apply(x.apply(f)));
    CHECK(hx.apply(f) == xh.apply(f));
  }
}
