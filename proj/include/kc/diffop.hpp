#pragma once

#include <string>
#include <unordered_map>

#include "kc/field.hpp"

namespace kc {

// Normal-form differential operator: sum of FieldElem coefficients times
// derivative monomials, coefficients on the left. Equality of operators is
// equality of the underlying maps.
class DiffOp {
 public:
  using TermMap = std::unordered_map<Mono, FieldElem, MonoHash>;

  DiffOp() : n_(0) {}
  explicit DiffOp(int n);

  static DiffOp zero(int n) { return DiffOp(n); }
  static DiffOp identity(int n);
  static DiffOp constant(int n, const Rat& c);
  static DiffOp partial(int n, int axis, int order = 1);
  static DiffOp mult(const FieldElem& f);  // multiplication operator

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // total number of coefficient-polynomial terms, a size measure for residuals
  std::size_t residual_size() const;
  const TermMap& terms() const { return terms_; }
  // coefficient of a derivative monomial (zero element if absent)
  FieldElem coefficient(const Mono& alpha) const;
  int order() const;  // max |alpha|, 0 for the zero operator

  void add_term(const Mono& alpha, const FieldElem& f);

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);  // composition, normal form
  DiffOp times(const Rat& c) const;
  DiffOp times(const FieldElem& f) const;  // left multiplication by a function

  bool operator==(const DiffOp& o) const;

  // action on a test function
  FieldElem apply(const FieldElem& f) const;

  // formal transpose: f d^alpha -> (-1)^|alpha| d^alpha f, renormal-ordered
  DiffOp transpose() const;
  // terms of given total derivative order
  DiffOp order_part(int ord) const;

  std::string str() const;

 private:
  void check_same_dim(const DiffOp& o) const;

  int n_;
  TermMap terms_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp anticommutator(const DiffOp& a, const DiffOp& b);

}  // namespace kc
