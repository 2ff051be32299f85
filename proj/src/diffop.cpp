#include "kc/diffop.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "kc/errors.hpp"

namespace kc {

namespace {

// product of per-axis binomial coefficients C(alpha_i, nu_i)
Rat multi_binomial(const Mono& alpha, const Mono& nu, int n) {
  unsigned long long prod = 1;
  for (int v = 0; v < n; ++v) {
    int a = alpha.e[v], k = nu.e[v];
    unsigned long long c = 1;
    for (int j = 1; j <= k; ++j) c = c * static_cast<unsigned long long>(a - j + 1) / static_cast<unsigned long long>(j);
    prod *= c;
  }
  return Rat(static_cast<long>(prod));
}

// enumerate all nu with 0 <= nu <= alpha componentwise over the first n vars
template <typename F>
void for_each_subindex(const Mono& alpha, int n, F&& fn) {
  Mono nu;
  int v = 0;
  // odometer over the nonzero axes
  std::vector<int> axes;
  for (int i = 0; i < n; ++i)
    if (alpha.e[i] > 0) axes.push_back(i);
  (void)v;
  while (true) {
    fn(nu);
    int j = 0;
    for (; j < static_cast<int>(axes.size()); ++j) {
      int ax = axes[static_cast<std::size_t>(j)];
      if (nu.e[ax] < alpha.e[ax]) {
        ++nu.e[ax];
        break;
      }
      nu.e[ax] = 0;
    }
    if (j == static_cast<int>(axes.size())) break;
  }
}

}  // namespace

DiffOp::DiffOp(int n) : n_(n) {
  if (n < 2 || 2 * n > Mono::kMaxVars) throw IndexRange("dimension n", n);
}

DiffOp DiffOp::identity(int n) {
  DiffOp op(n);
  op.add_term(Mono::one(), FieldElem::one(n));
  return op;
}

DiffOp DiffOp::constant(int n, const Rat& c) {
  DiffOp op(n);
  op.add_term(Mono::one(), FieldElem::constant(n, c));
  return op;
}

DiffOp DiffOp::partial(int n, int axis, int order) {
  DiffOp op(n);
  if (axis < 1 || axis > n) throw IndexRange("axis", axis);
  if (order < 0) throw IndexRange("derivative order", order);
  op.add_term(Mono::var(axis - 1, order), FieldElem::one(n));
  return op;
}

DiffOp DiffOp::mult(const FieldElem& f) {
  DiffOp op(f.dim());
  op.add_term(Mono::one(), f);
  return op;
}

std::size_t DiffOp::residual_size() const {
  std::size_t s = 0;
  for (const auto& [a, f] : terms_) s += f.term_count();
  return s;
}

FieldElem DiffOp::coefficient(const Mono& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? FieldElem::zero(n_) : it->second;
}

int DiffOp::order() const {
  int o = 0;
  for (const auto& [a, f] : terms_) o = std::max(o, a.total_degree());
  return o;
}

void DiffOp::add_term(const Mono& alpha, const FieldElem& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp DiffOp::operator-() const {
  DiffOp op(n_);
  for (const auto& [a, f] : terms_) op.terms_.emplace(a, -f);
  return op;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_same_dim(o);
  for (const auto& [a, f] : o.terms_) add_term(a, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_same_dim(o);
  for (const auto& [a, f] : o.terms_) add_term(a, -f);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  a.check_same_dim(b);
  const int n = a.n_;
  DiffOp out(n);
  DiffOp::TermMap acc;
  // (f d^alpha)(g d^beta) = sum_{nu<=alpha} C(alpha,nu) f (d^nu g) d^(alpha-nu+beta)
  for (const auto& [beta, g] : b.terms_) {
    // derivatives of g needed across all alpha of a, memoized per multi-index
    std::unordered_map<Mono, FieldElem, MonoHash> derivs;
    derivs.emplace(Mono::one(), g);
    auto deriv_of = [&](const Mono& nu) -> const FieldElem& {
      auto it = derivs.find(nu);
      if (it != derivs.end()) return it->second;
      // recurse on the first nonzero axis
      std::vector<Mono> chain;
      Mono cur = nu;
      while (derivs.find(cur) == derivs.end()) {
        chain.push_back(cur);
        for (int v = 0; v < n; ++v)
          if (cur.e[v] > 0) {
            --cur.e[v];
            break;
          }
      }
      while (!chain.empty()) {
        Mono next = chain.back();
        chain.pop_back();
        int axis = 0;
        Mono prev = next;
        for (int v = 0; v < n; ++v)
          if (next.e[v] > 0) {
            --prev.e[v];
            axis = v + 1;
            break;
          }
        derivs.emplace(next, derivs.at(prev).derivative(axis));
      }
      return derivs.at(nu);
    };
    for (const auto& [alpha, f] : a.terms_) {
      for_each_subindex(alpha, n, [&](const Mono& nu) {
        const FieldElem& dg = deriv_of(nu);
        if (dg.is_zero()) return;
        Rat binom = multi_binomial(alpha, nu, n);
        FieldElem prod = FieldElem::mul_raw(f, dg).times(binom);
        auto [it, fresh] = acc.try_emplace(alpha.over(nu).times(beta), std::move(prod));
        if (!fresh) it->second.accumulate(prod);
      });
    }
  }
  for (auto& [alpha, f] : acc) {
    f.normalize();
    if (!f.is_zero()) out.terms_.emplace(alpha, std::move(f));
  }
  return out;
}

DiffOp DiffOp::times(const Rat& c) const {
  DiffOp op(n_);
  if (c.is_zero()) return op;
  for (const auto& [a, f] : terms_) op.terms_.emplace(a, f.times(c));
  return op;
}

DiffOp DiffOp::times(const FieldElem& f) const { return DiffOp::mult(f) * *this; }

bool DiffOp::operator==(const DiffOp& o) const {
  check_same_dim(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [a, f] : terms_) {
    auto it = o.terms_.find(a);
    if (it == o.terms_.end() || !(it->second == f)) return false;
  }
  return true;
}

FieldElem DiffOp::apply(const FieldElem& f) const {
  FieldElem out = FieldElem::zero(n_);
  for (const auto& [alpha, coeff] : terms_) {
    FieldElem df = f;
    for (int v = 0; v < n_; ++v)
      for (int k = 0; k < alpha.e[v]; ++k) df = df.derivative(v + 1);
    out += coeff * df;
  }
  return out;
}

DiffOp DiffOp::transpose() const {
  DiffOp out(n_);
  for (const auto& [alpha, coeff] : terms_) {
    DiffOp d = DiffOp::identity(n_);
    for (int v = 0; v < n_; ++v)
      if (alpha.e[v] > 0) d = d * DiffOp::partial(n_, v + 1, alpha.e[v]);
    int sign = alpha.total_degree() % 2 == 0 ? 1 : -1;
    out += (d * DiffOp::mult(coeff)).times(Rat(sign));
  }
  return out;
}

DiffOp DiffOp::order_part(int ord) const {
  DiffOp out(n_);
  for (const auto& [alpha, coeff] : terms_)
    if (alpha.total_degree() == ord) out.add_term(alpha, coeff);
  return out;
}

void DiffOp::check_same_dim(const DiffOp& o) const {
  if (n_ != o.n_) throw DimensionMismatch(n_, o.n_);
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Mono, FieldElem>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    if (a->first.total_degree() != b->first.total_degree())
      return a->first.total_degree() > b->first.total_degree();
    return b->first < a->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : sorted) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << t->second.str() << ")";
    for (int v = 0; v < n_; ++v) {
      if (t->first.e[v] == 0) continue;
      os << "*d" << (v + 1);
      if (t->first.e[v] > 1) os << "^" << t->first.e[v];
    }
  }
  return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp anticommutator(const DiffOp& a, const DiffOp& b) { return a * b + b * a; }

}  // namespace kc
