#include "kc/poly.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>

#include "kc/errors.hpp"

namespace kc {

Mono Mono::var(int v, int exp) {
  if (v < 0 || v >= kMaxVars) throw IndexRange("variable index", v);
  Mono m;
  m.e[v] = static_cast<int16_t>(exp);
  return m;
}

bool Mono::is_one() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

int Mono::total_degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Mono Mono::times(const Mono& o) const {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
  return m;
}

Mono Mono::over(const Mono& o) const {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
  return m;
}

bool Mono::divides(const Mono& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

std::size_t MonoHash::operator()(const Mono& m) const {
  // splitmix-style mixing over the packed exponents
  constexpr int kWords = Mono::kMaxVars * sizeof(int16_t) / sizeof(std::uint64_t);
  std::uint64_t words[kWords];
  std::memcpy(words, m.e.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < kWords; ++i) {
    std::uint64_t x = words[i] + 0x9e3779b97f4a7c15ull + h;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    h = x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

namespace {
bool term_mono_less(const Poly::Term& a, const Poly::Term& b) { return a.first < b.first; }
}  // namespace

void Poly::sort_and_combine() {
  std::sort(terms_.begin(), terms_.end(), term_mono_less);
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms_.size();) {
    Mono m = terms_[r].first;
    Rat acc = std::move(terms_[r].second);
    for (++r; r < terms_.size() && terms_[r].first == m; ++r) acc += terms_[r].second;
    if (!acc.is_zero()) {
      terms_[w].first = m;
      terms_[w].second = std::move(acc);
      ++w;
    }
  }
  terms_.resize(w);
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(Mono::one(), c);
  return p;
}

Poly Poly::variable(int var, int exp) { return monomial(Mono::var(var, exp), Rat(1)); }

Poly Poly::monomial(const Mono& m, const Rat& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rat Poly::constant_value() const {
  if (terms_.empty() || !terms_.front().first.is_one()) return Rat(0);
  return terms_.front().second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Mono& mm) { return t.first < mm; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(m, c));
  }
}

Poly Poly::operator-() const {
  Poly p;
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    terms_ = o.terms_;
    return *this;
  }
  TermList out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b);
      ++b;
    } else {
      Rat v = std::move(a->second);
      v += b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  TermList out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, -b->second);
      ++b;
    } else {
      Rat v = std::move(a->second);
      v -= b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  // single-term shortcuts keep the common scaling case allocation-light
  if (a.term_count() == 1) return b.times_monomial(a.terms().front().first, a.terms().front().second);
  if (b.term_count() == 1) return a.times_monomial(b.terms().front().first, b.terms().front().second);
  p.terms_.reserve(a.term_count() * b.term_count());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.terms_.emplace_back(ma.times(mb), ca * cb);
  p.sort_and_combine();
  return p;
}

Poly Poly::times(const Rat& c) const {
  Poly p;
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [m, v] : terms_) p.terms_.emplace_back(m, v * c);
  return p;
}

Poly Poly::times_monomial(const Mono& m, const Rat& c) const {
  Poly p;
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // uniform exponent translation preserves lex order
  for (const auto& [mm, v] : terms_) p.terms_.emplace_back(mm.times(m), v * c);
  return p;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Poly Poly::derivative(int var) const {
  Poly p;
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    int ev = m.e[var];
    if (ev == 0) continue;
    Mono d = m;
    d.e[var] = static_cast<int16_t>(ev - 1);
    p.terms_.emplace_back(d, c * Rat(ev));
  }
  // dropping ev == 0 terms and shifting the rest uniformly keeps the order
  return p;
}

Poly Poly::substituted(int var, const Poly& repl) const {
  // group by exponent of var, then Horner over the replacement
  int maxd = 0;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] < 0) throw InvalidParameter("substitution into a negative power");
    maxd = std::max(maxd, static_cast<int>(m.e[var]));
  }
  std::vector<Poly> by_deg(static_cast<std::size_t>(maxd) + 1);
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    int d = rest.e[var];
    rest.e[var] = 0;
    by_deg[static_cast<std::size_t>(d)].add_term(rest, c);
  }
  Poly acc = by_deg[static_cast<std::size_t>(maxd)];
  for (int d = maxd - 1; d >= 0; --d) {
    acc = acc * repl;
    acc += by_deg[static_cast<std::size_t>(d)];
  }
  return acc;
}

Rat Poly::evaluated(std::span<const Rat> values) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < Mono::kMaxVars; ++v) {
      int ev = m.e[v];
      if (ev == 0) continue;
      if (static_cast<std::size_t>(v) >= values.size())
        throw InvalidParameter("evaluation missing a variable value");
      const Rat& x = values[static_cast<std::size_t>(v)];
      if (ev < 0 && x.is_zero()) throw InvalidParameter("evaluation at a pole");
      Rat p(1);
      Rat base = ev > 0 ? x : Rat(1) / x;
      for (int k = 0; k < std::abs(ev); ++k) p *= base;
      t *= p;
    }
    sum += t;
  }
  return sum;
}

int Poly::degree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.e[var] > d) d = m.e[var];
    first = false;
  }
  return d;
}

int Poly::low_degree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.e[var] < d) d = m.e[var];
    first = false;
  }
  return d;
}

Rat Poly::content() const {
  Rat g(0);
  for (const auto& [m, c] : terms_) g = Rat::gcd(g, c);
  return g;
}

const Mono& Poly::leading_monomial() const {
  if (terms_.empty()) throw InvalidParameter("leading monomial of zero polynomial");
  return terms_.back().first;
}

std::optional<Poly> Poly::divided_exactly(const Poly& d) const {
  if (d.is_zero()) throw InvalidParameter("division by zero polynomial");
  if (is_zero()) return Poly();

  // Laurent division: run the genuine-polynomial division in per-operand
  // reference frames (lex order is translation invariant, so the stored
  // exponents never need shifting).
  Mono frame_p, frame_d;
  for (int v = 0; v < Mono::kMaxVars; ++v) {
    frame_p.e[v] = static_cast<int16_t>(low_degree(v));
    frame_d.e[v] = static_cast<int16_t>(d.low_degree(v));
  }
  const Mono& lead = d.leading_monomial();
  const Rat& lead_c = d.terms().back().second;

  // cheap abort: the leading term must reduce
  {
    const Mono& lm = leading_monomial();
    for (int v = 0; v < Mono::kMaxVars; ++v)
      if (lm.e[v] - frame_p.e[v] < lead.e[v] - frame_d.e[v]) return std::nullopt;
  }

  std::map<Mono, Rat, std::greater<Mono>> rem(terms_.begin(), terms_.end());
  Poly quot;
  while (!rem.empty()) {
    const Mono lm = rem.begin()->first;
    for (int v = 0; v < Mono::kMaxVars; ++v)
      if (lm.e[v] - frame_p.e[v] < lead.e[v] - frame_d.e[v]) return std::nullopt;
    Mono qm = lm.over(lead);
    Rat qc = rem.begin()->second / lead_c;
    quot.add_term(qm, qc);
    for (const auto& [m, c] : d.terms()) {
      auto [it, fresh] = rem.emplace(m.times(qm), Rat(0));
      it->second -= qc * c;
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  return quot;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  int maxd = 0;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] < 0) throw InvalidParameter("coefficient extraction with negative power");
    maxd = std::max(maxd, static_cast<int>(m.e[var]));
  }
  std::vector<Poly> out(static_cast<std::size_t>(maxd) + 1);
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    int d = rest.e[var];
    rest.e[var] = 0;
    out[static_cast<std::size_t>(d)].add_term(rest, c);
  }
  return out;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (!mag.is_one() || m.is_one()) {
      os << mag.str();
      printed = true;
    }
    for (int v = 0; v < Mono::kMaxVars; ++v) {
      if (m.e[v] == 0) continue;
      if (printed) os << "*";
      if (static_cast<std::size_t>(v) < names.size())
        os << names[static_cast<std::size_t>(v)];
      else
        os << "v" << v;
      if (m.e[v] != 1) os << "^" << m.e[v];
      printed = true;
    }
  }
  return os.str();
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw InvalidParameter("negative polynomial power");
  Poly r = Poly::constant(Rat(1));
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace kc
