#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace kc {

// Exact rational scalar. Canonical at all times: reduced to lowest terms,
// denominator > 0.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(static_cast<signed long>(v)) {}
  Rat(long num, long den);
  explicit Rat(const mpq_class& q);
  explicit Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "-p", "p/q".
  static Rat parse(const std::string& s);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat abs() const;
  // gcd of magnitudes: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2). gcd(0,x) = |x|.
  static Rat gcd(const Rat& a, const Rat& b);
  // Exact square root when *this is the square of a rational, nullopt otherwise.
  std::optional<Rat> exact_sqrt() const;

  double to_double() const { return q_.get_d(); }
  // "p" when denominator is 1, else "p/q".
  std::string str() const;
  const mpq_class& raw() const { return q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class q_;
};

}  // namespace kc
