#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kc/diffop.hpp"
#include "kc/errors.hpp"
#include "kc/integrals.hpp"
#include "test_util.hpp"

using namespace kc;

TEST_CASE("normal ordering: d1 x1 = x1 d1 + 1") {
  const int n = 2;
  DiffOp d1 = DiffOp::partial(n, 1);
  DiffOp x1 = DiffOp::mult(FieldElem::x(n, 1));
  DiffOp prod = d1 * x1;

  DiffOp expect(n);
  expect.add_term(Mono::var(0), FieldElem::x(n, 1));
  expect.add_term(Mono::one(), FieldElem::one(n));
  CHECK(prod == expect);
}

TEST_CASE("normal ordering: d1^2 x1 = x1 d1^2 + 2 d1") {
  const int n = 2;
  DiffOp prod = DiffOp::partial(n, 1, 2) * DiffOp::mult(FieldElem::x(n, 1));
  DiffOp expect(n);
  expect.add_term(Mono::var(0, 2), FieldElem::x(n, 1));
  expect.add_term(Mono::var(0), FieldElem::constant(n, Rat(2)));
  CHECK(prod == expect);
}

TEST_CASE("products agree with the action oracle") {
  const int n = 3;
  DiffOp l12 = angular_momentum(n, 1, 2);
  DiffOp l23 = angular_momentum(n, 2, 3);
  DiffOp prod = l12 * l23;
  testutil::Rng rng(101u);
  for (int it = 0; it < 8; ++it) {
    FieldElem f = rng.field_elem(n);
    CHECK(prod.apply(f) == l12.apply(l23.apply(f)));
  }
}

TEST_CASE("commutator examples") {
  const int n = 2;
  DiffOp d1 = DiffOp::partial(n, 1);
  DiffOp x1sq = DiffOp::mult(FieldElem::x(n, 1) * FieldElem::x(n, 1));
  DiffOp expect(n);
  expect.add_term(Mono::one(), FieldElem::x(n, 1).times(Rat(2)));
  CHECK(commutator(d1, x1sq) == expect);

  testutil::Rng rng(7u);
  for (int it = 0; it < 6; ++it) {
    DiffOp a = rng.diff_op(n);
    CHECK(commutator(a, a).is_zero());
  }
}

TEST_CASE("rotation generators close: [L12, L23] = L13") {
  const int n = 3;
  DiffOp c = commutator(angular_momentum(n, 1, 2), angular_momentum(n, 2, 3));
  CHECK(c == angular_momentum(n, 1, 3));
  // and against the action oracle
  testutil::Rng rng(57u);
  for (int it = 0; it < 6; ++it) {
    FieldElem f = rng.field_elem(n);
    CHECK(c.apply(f) == angular_momentum(n, 1, 3).apply(f));
  }
}

TEST_CASE("anticommutator examples") {
  const int n = 2;
  DiffOp d1 = DiffOp::partial(n, 1);
  DiffOp x1 = DiffOp::mult(FieldElem::x(n, 1));
  DiffOp expect(n);
  expect.add_term(Mono::var(0), FieldElem::x(n, 1).times(Rat(2)));
  expect.add_term(Mono::one(), FieldElem::one(n));
  CHECK(anticommutator(d1, x1) == expect);

  CHECK(anticommutator(d1, DiffOp::zero(n)).is_zero());

  DiffOp l12 = angular_momentum(n, 1, 2);
  CHECK(anticommutator(l12, l12) == (l12 * l12).times(Rat(2)));
}

TEST_CASE("apply examples") {
  const int n = 2;
  DiffOp d1 = DiffOp::partial(n, 1);
  FieldElem x1sq = FieldElem::x(n, 1, 2);
  CHECK(d1.apply(x1sq) == FieldElem::x(n, 1).times(Rat(2)));

  DiffOp x1d1(n);
  x1d1.add_term(Mono::var(0), FieldElem::x(n, 1));
  // x1 d1 r = x1^2 r / rho
  CHECK(x1d1.apply(FieldElem::r(n)) ==
        FieldElem::make(n, Poly(), Poly::variable(VarLayout(n).x(1), 2), 1));
}

TEST_CASE("functoriality of apply on random operators") {
  const int n = 2;
  testutil::Rng rng(301u);
  for (int it = 0; it < 10; ++it) {
    DiffOp a = rng.diff_op(n), b = rng.diff_op(n);
    FieldElem f = rng.field_elem(n);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
  }
}

TEST_CASE("associativity on random operators") {
  const int n = 2;
  testutil::Rng rng(401u);
  for (int it = 0; it < 6; ++it) {
    DiffOp a = rng.diff_op(n), b = rng.diff_op(n), c = rng.diff_op(n);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("antisymmetry and Jacobi identity") {
  const int n = 2;
  testutil::Rng rng(501u);
  for (int it = 0; it < 5; ++it) {
    DiffOp a = rng.diff_op(n), b = rng.diff_op(n), c = rng.diff_op(n);
    CHECK(commutator(a, b) == -commutator(b, a));
    DiffOp jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                    commutator(c, commutator(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("dimension mismatch in composition") {
  CHECK_THROWS_AS(DiffOp::partial(2, 1) * DiffOp::partial(3, 1), DimensionMismatch);
}
