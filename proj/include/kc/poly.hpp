#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kc/rat.hpp"

namespace kc {

// Packed exponent vector. Variables are identified by index; a ring layout
// (which index means which symbol) is imposed by the layer above. Exponents
// may be negative (Laurent).
struct Mono {
  static constexpr int kMaxVars = 24;
  std::array<int16_t, kMaxVars> e{};

  static Mono one() { return Mono{}; }
  static Mono var(int v, int exp = 1);

  bool is_one() const;
  int total_degree() const;

  Mono times(const Mono& o) const;
  Mono over(const Mono& o) const;  // exponent subtraction (always legal, Laurent)
  // componentwise e <= o.e, i.e. o/this has no negative exponents
  bool divides(const Mono& o) const;

  bool operator==(const Mono& o) const { return e == o.e; }
  // array comparison is lexicographic with variable 0 strongest
  auto operator<=>(const Mono& o) const = default;
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const;
};

// Sparse multivariate Laurent polynomial over Rat. Terms are kept sorted by
// ascending lex order with no zero coefficients, so representation equality
// is value equality.
class Poly {
 public:
  using Term = std::pair<Mono, Rat>;
  using TermList = std::vector<Term>;

  Poly() = default;
  static Poly constant(const Rat& c);
  static Poly variable(int var, int exp = 1);
  static Poly monomial(const Mono& m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent); for is_constant() polys this is the value.
  Rat constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermList& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly times(const Rat& c) const;
  Poly times_monomial(const Mono& m, const Rat& c) const;

  bool operator==(const Poly& o) const;

  // d/d(var) with the Laurent power rule.
  Poly derivative(int var) const;
  // Substitute a polynomial for a variable. Requires nonnegative exponents of var.
  Poly substituted(int var, const Poly& repl) const;
  // Full evaluation; values[v] is the value of variable v.
  Rat evaluated(std::span<const Rat> values) const;

  int degree(int var) const;      // max exponent of var over terms, 0 if zero poly
  int low_degree(int var) const;  // min exponent of var over terms, 0 if zero poly
  // gcd of coefficient magnitudes (0 for the zero polynomial)
  Rat content() const;
  // max lex monomial; requires nonzero
  const Mono& leading_monomial() const;

  // Exact division, Laurent-safe. nullopt when the division leaves a remainder.
  std::optional<Poly> divided_exactly(const Poly& d) const;

  // Coefficients of *this viewed as univariate in var, indexed by exponent.
  // Requires nonnegative exponents of var.
  std::vector<Poly> coefficients_in(int var) const;

  // Deterministic textual form, terms in descending lex order.
  std::string str(std::span<const std::string> names) const;

 private:
  void sort_and_combine();
  TermList terms_;
};

Poly pow(const Poly& p, int e);

}  // namespace kc
