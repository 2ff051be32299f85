#pragma once

#include "kc/diffop.hpp"

namespace kc {

struct ModelParams {
  int n;  // spatial dimension, >= 2
  explicit ModelParams(int n_);
};

// rotation generator x_i d_k - x_k d_i
DiffOp angular_momentum(int n, int i, int k);

// -1/2 sum d_i^2 - gamma/r + sum beta_i/x_i^2
DiffOp build_H(const ModelParams& params);

// symmetrized momentum term plus the non-central potential tail
DiffOp build_X(const ModelParams& params);

// quadratic rotation invariant of the leading (l+1)-block, 1 <= l <= n-2;
// l = 0 yields the constant operator -2 beta_1
DiffOp build_Z(int l, const ModelParams& params);

// quadratic rotation invariant of the trailing block starting at p,
// 1 <= p <= n-1; p = n yields the zero operator
DiffOp build_Y(int p, const ModelParams& params);

}  // namespace kc
