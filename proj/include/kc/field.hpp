#pragma once

#include <string>
#include <vector>

#include "kc/poly.hpp"

namespace kc {

// Variable layout of the coefficient ring for a fixed spatial dimension n:
// indices 0..n-1 are x_1..x_n (Laurent), n..2n-2 are beta_1..beta_{n-1},
// 2n-1 is gamma.
struct VarLayout {
  int n;

  explicit VarLayout(int n_) : n(n_) {}
  int x(int i) const { return i - 1; }          // i in 1..n
  int beta(int i) const { return n + i - 1; }   // i in 1..n-1
  int gamma() const { return 2 * n - 1; }
  int nvars() const { return 2 * n; }
  std::vector<std::string> names() const;
};

// Element of the coefficient field: (A + B*r) / rho^k with rho = sum x_i^2
// and r^2 = rho. Canonical form: k minimal (A, B not both divisible by rho),
// k = 0 for the zero element.
class FieldElem {
 public:
  FieldElem() : n_(0), k_(0) {}

  static FieldElem zero(int n);
  static FieldElem one(int n);
  static FieldElem constant(int n, const Rat& c);
  static FieldElem from_poly(int n, Poly even);
  // general constructor (A + B*r)/rho^k, canonicalized
  static FieldElem make(int n, Poly even, Poly odd, int rho_power);
  static FieldElem x(int n, int i, int exp = 1);
  static FieldElem beta(int n, int i);
  static FieldElem gamma(int n);
  static FieldElem r(int n);          // the radical itself
  static FieldElem inv_r(int n);      // 1/r = r/rho
  static const Poly& rho(int n);      // sum of x_i^2

  int dim() const { return n_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  const Poly& even_part() const { return a_; }
  const Poly& odd_part() const { return b_; }
  int rho_power() const { return k_; }
  std::size_t term_count() const { return a_.term_count() + b_.term_count(); }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  FieldElem times(const Rat& c) const;

  // hot-loop interface: products and sums without the rho-minimality pass;
  // normalize() restores the canonical form and must run before the value
  // escapes to any caller
  static FieldElem mul_raw(const FieldElem& a, const FieldElem& b);
  void accumulate(const FieldElem& o);
  void normalize() { canonicalize(); }

  bool operator==(const FieldElem& o) const;

  // partial derivative along axis i (1-based), with dr/dx_i = x_i r / rho
  FieldElem derivative(int axis) const;

  std::string str() const;

 private:
  FieldElem(int n, Poly a, Poly b, int k) : n_(n), a_(std::move(a)), b_(std::move(b)), k_(k) {}
  void canonicalize();
  void check_same_dim(const FieldElem& o) const;

  int n_;
  Poly a_;  // even part
  Poly b_;  // coefficient of r
  int k_;   // rho power in the denominator
};

}  // namespace kc
