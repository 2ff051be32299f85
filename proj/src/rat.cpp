#include "kc/rat.hpp"

#include <ostream>

#include "kc/errors.hpp"

namespace kc {

Rat::Rat(long num, long den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  q_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
  q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class q(s);
      q.canonicalize();
      return Rat(q);
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidParameter("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rat Rat::abs() const {
  Rat r;
  r.q_ = ::abs(q_);
  return r;
}

Rat Rat::gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.q_.get_den_mpz_t(), b.q_.get_den_mpz_t());
  return Rat(num, den);
}

std::optional<Rat> Rat::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return Rat(0);
  if (!mpz_perfect_square_p(q_.get_num_mpz_t()) || !mpz_perfect_square_p(q_.get_den_mpz_t()))
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q_.get_den_mpz_t());
  return Rat(num, den);
}

std::string Rat::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_; }

}  // namespace kc
