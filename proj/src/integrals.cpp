#include "kc/integrals.hpp"

#include "kc/errors.hpp"

namespace kc {

ModelParams::ModelParams(int n_) : n(n_) {
  if (n < 2) throw IndexRange("dimension n", n);
}

DiffOp angular_momentum(int n, int i, int k) {
  if (i < 1 || i > n) throw IndexRange("axis", i);
  if (k < 1 || k > n) throw IndexRange("axis", k);
  DiffOp op(n);
  op.add_term(Mono::var(k - 1), FieldElem::x(n, i));
  op.add_term(Mono::var(i - 1), -FieldElem::x(n, k));
  return op;
}

DiffOp build_H(const ModelParams& params) {
  const int n = params.n;
  DiffOp h(n);
  for (int i = 1; i <= n; ++i) h.add_term(Mono::var(i - 1, 2), FieldElem::constant(n, Rat(-1, 2)));
  h.add_term(Mono::one(), -(FieldElem::gamma(n) * FieldElem::inv_r(n)));
  for (int i = 1; i <= n - 1; ++i)
    h.add_term(Mono::one(), FieldElem::beta(n, i) * FieldElem::x(n, i, -2));
  return h;
}

DiffOp build_X(const ModelParams& params) {
  const int n = params.n;
  DiffOp x(n);
  for (int k = 1; k <= n - 1; ++k) {
    DiffOp l = angular_momentum(n, n, k);
    DiffOp p = DiffOp::partial(n, k);
    x += anticommutator(l, p).times(Rat(1, 2));
  }
  FieldElem xn = FieldElem::x(n, n);
  FieldElem pot = FieldElem::gamma(n).times(Rat(1, 2)) * FieldElem::inv_r(n);
  for (int i = 1; i <= n - 1; ++i) pot -= FieldElem::beta(n, i) * FieldElem::x(n, i, -2);
  x.add_term(Mono::one(), (xn * pot).times(Rat(2)));
  return x;
}

namespace {

// sum of squared rotation generators over lo <= i < k <= hi, minus
// 2 (sum_{i=lo..hi} x_i^2)(sum_{k=lo..pot_hi} beta_k/x_k^2)
DiffOp block_invariant(int n, int lo, int hi, int pot_hi) {
  DiffOp op(n);
  for (int i = lo; i <= hi; ++i)
    for (int k = i + 1; k <= hi; ++k) {
      DiffOp l = angular_momentum(n, i, k);
      op += l * l;
    }
  FieldElem xs = FieldElem::zero(n);
  for (int i = lo; i <= hi; ++i) xs += FieldElem::x(n, i) * FieldElem::x(n, i);
  FieldElem pot = FieldElem::zero(n);
  for (int k = lo; k <= pot_hi; ++k) pot += FieldElem::beta(n, k) * FieldElem::x(n, k, -2);
  op.add_term(Mono::one(), (xs * pot).times(Rat(-2)));
  return op;
}

}  // namespace

DiffOp build_Z(int l, const ModelParams& params) {
  const int n = params.n;
  if (l == 0) {
    DiffOp z(n);
    z.add_term(Mono::one(), FieldElem::beta(n, 1).times(Rat(-2)));
    return z;
  }
  if (l < 0 || l > n - 2) throw IndexRange("Z index", l);
  return block_invariant(n, 1, l + 1, l + 1);
}

DiffOp build_Y(int p, const ModelParams& params) {
  const int n = params.n;
  if (p == n) return DiffOp::zero(n);
  if (p < 1 || p > n - 1) throw IndexRange("Y index", p);
  return block_invariant(n, p, n, n - 1);
}

}  // namespace kc
