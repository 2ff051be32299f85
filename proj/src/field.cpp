#include "kc/field.hpp"

#include <map>
#include <sstream>

#include "kc/errors.hpp"

namespace kc {

std::vector<std::string> VarLayout::names() const {
  std::vector<std::string> v(static_cast<std::size_t>(nvars()));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(x(i))] = "x" + std::to_string(i);
  for (int i = 1; i <= n - 1; ++i) v[static_cast<std::size_t>(beta(i))] = "beta" + std::to_string(i);
  v[static_cast<std::size_t>(gamma())] = "gamma";
  return v;
}

namespace {
void check_dim_value(int n) {
  if (n < 2 || 2 * n > Mono::kMaxVars) throw IndexRange("dimension n", n);
}
}  // namespace

const Poly& FieldElem::rho(int n) {
  check_dim_value(n);
  thread_local std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Poly p;
    VarLayout vars(n);
    for (int i = 1; i <= n; ++i) p.add_term(Mono::var(vars.x(i), 2), Rat(1));
    it = cache.emplace(n, std::move(p)).first;
  }
  return it->second;
}

FieldElem FieldElem::zero(int n) {
  check_dim_value(n);
  return FieldElem(n, Poly(), Poly(), 0);
}

FieldElem FieldElem::one(int n) { return constant(n, Rat(1)); }

FieldElem FieldElem::constant(int n, const Rat& c) {
  check_dim_value(n);
  return FieldElem(n, Poly::constant(c), Poly(), 0);
}

FieldElem FieldElem::from_poly(int n, Poly even) {
  check_dim_value(n);
  return FieldElem(n, std::move(even), Poly(), 0);
}

FieldElem FieldElem::make(int n, Poly even, Poly odd, int rho_power) {
  check_dim_value(n);
  if (rho_power < 0) throw InvalidParameter("negative rho power");
  FieldElem f(n, std::move(even), std::move(odd), rho_power);
  f.canonicalize();
  return f;
}

FieldElem FieldElem::x(int n, int i, int exp) {
  check_dim_value(n);
  if (i < 1 || i > n) throw IndexRange("axis", i);
  return FieldElem(n, Poly::variable(VarLayout(n).x(i), exp), Poly(), 0);
}

FieldElem FieldElem::beta(int n, int i) {
  check_dim_value(n);
  if (i < 1 || i > n - 1) throw IndexRange("beta index", i);
  return FieldElem(n, Poly::variable(VarLayout(n).beta(i)), Poly(), 0);
}

FieldElem FieldElem::gamma(int n) {
  check_dim_value(n);
  return FieldElem(n, Poly::variable(VarLayout(n).gamma()), Poly(), 0);
}

FieldElem FieldElem::r(int n) {
  check_dim_value(n);
  return FieldElem(n, Poly(), Poly::constant(Rat(1)), 0);
}

FieldElem FieldElem::inv_r(int n) {
  check_dim_value(n);
  return FieldElem(n, Poly(), Poly::constant(Rat(1)), 1);
}

namespace {

// Exact division by rho = x1^2 + s, viewing the polynomial as univariate in
// x1 with coefficients in the remaining variables: Q_{d-2} = P_d - s Q_d,
// descending in d. Fails (nullopt) when the bottom equations do not close.
std::optional<Poly> divided_by_rho(const Poly& p, int n) {
  if (p.is_zero()) return Poly();
  Poly s;
  {
    VarLayout vars(n);
    for (int i = 2; i <= n; ++i) s.add_term(Mono::var(vars.x(i), 2), Rat(1));
  }
  // bucket by x1 exponent, descending
  std::map<int, Poly, std::greater<int>> buckets;
  for (const auto& [m, c] : p.terms()) {
    Mono rest = m;
    int d = rest.e[0];
    rest.e[0] = 0;
    buckets[d].add_term(rest, c);
  }
  const int top = buckets.begin()->first;
  const int low = buckets.rbegin()->first;
  std::map<int, Poly> q;
  for (int d = top; d >= low; --d) {
    auto pit = buckets.find(d);
    auto qit = q.find(d);
    Poly qd2;
    if (pit != buckets.end()) qd2 = std::move(pit->second);
    if (qit != q.end()) qd2 -= s * qit->second;
    if (qd2.is_zero()) continue;
    if (d - 2 < low) return std::nullopt;
    q.emplace(d - 2, std::move(qd2));
  }
  Poly out;
  for (auto& [d, poly] : q) out += poly.times_monomial(Mono::var(0, d), Rat(1));
  return out;
}

}  // namespace

void FieldElem::canonicalize() {
  if (a_.is_zero() && b_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto qa = divided_by_rho(a_, n_);
    if (!qa) break;
    auto qb = divided_by_rho(b_, n_);
    if (!qb) break;
    a_ = std::move(*qa);
    b_ = std::move(*qb);
    --k_;
  }
}

void FieldElem::check_same_dim(const FieldElem& o) const {
  if (n_ != o.n_) throw DimensionMismatch(n_, o.n_);
}

FieldElem FieldElem::operator-() const { return FieldElem(n_, -a_, -b_, k_); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  accumulate(o);
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem out = FieldElem::mul_raw(a, b);
  out.canonicalize();
  return out;
}

FieldElem FieldElem::mul_raw(const FieldElem& a, const FieldElem& b) {
  a.check_same_dim(b);
  Poly even = a.a_ * b.a_;
  if (!a.b_.is_zero() && !b.b_.is_zero()) even += (a.b_ * b.b_) * rho(a.n_);
  return FieldElem(a.n_, std::move(even), a.a_ * b.b_ + a.b_ * b.a_, a.k_ + b.k_);
}

void FieldElem::accumulate(const FieldElem& o) {
  check_same_dim(o);
  if (k_ == o.k_) {
    a_ += o.a_;
    b_ += o.b_;
    return;
  }
  const Poly& p = rho(n_);
  int k = std::max(k_, o.k_);
  if (k_ < k) {
    Poly lift = pow(p, k - k_);
    a_ = a_ * lift;
    b_ = b_ * lift;
    k_ = k;
  }
  if (o.k_ < k) {
    Poly lift = pow(p, k - o.k_);
    a_ += o.a_ * lift;
    b_ += o.b_ * lift;
  } else {
    a_ += o.a_;
    b_ += o.b_;
  }
}

FieldElem FieldElem::times(const Rat& c) const {
  if (c.is_zero()) return zero(n_);
  return FieldElem(n_, a_.times(c), b_.times(c), k_);
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_dim(o);
  return k_ == o.k_ && a_ == o.a_ && b_ == o.b_;
}

FieldElem FieldElem::derivative(int axis) const {
  if (axis < 1 || axis > n_) throw IndexRange("axis", axis);
  if (is_zero()) return zero(n_);
  const Poly& p = rho(n_);
  Poly xi = Poly::variable(VarLayout(n_).x(axis));
  // d/dx[(A + B r)/rho^k] = (rho A' - 2k x A + (rho B' + (1 - 2k) x B) r) / rho^(k+1)
  Poly na = p * a_.derivative(VarLayout(n_).x(axis)) + (xi * a_).times(Rat(-2 * k_));
  Poly nb = p * b_.derivative(VarLayout(n_).x(axis)) + (xi * b_).times(Rat(1 - 2 * k_));
  FieldElem out(n_, std::move(na), std::move(nb), k_ + 1);
  out.canonicalize();
  return out;
}

std::string FieldElem::str() const {
  if (is_zero()) return "0";
  auto names = VarLayout(n_).names();
  std::ostringstream os;
  bool need_paren = k_ > 0 && (!a_.is_zero() && !b_.is_zero());
  if (need_paren) os << "(";
  bool wrote = false;
  if (!a_.is_zero()) {
    os << a_.str(names);
    wrote = true;
  }
  if (!b_.is_zero()) {
    if (wrote) os << " + ";
    bool paren_b = b_.term_count() > 1;
    if (paren_b) os << "(";
    os << b_.str(names);
    if (paren_b) os << ")";
    os << "*r";
  }
  if (need_paren) os << ")";
  if (k_ > 0) os << "/rho" << (k_ > 1 ? "^" + std::to_string(k_) : "");
  return os.str();
}

}  // namespace kc
