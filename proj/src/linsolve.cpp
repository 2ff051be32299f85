#include "kc/linsolve.hpp"

#include <algorithm>
#include <unordered_map>

#include "kc/errors.hpp"

namespace kc {

namespace {

// y += a * x on sorted sparse vectors
void axpy(SparseEliminator::SparseVec& y, const Rat& a, const SparseEliminator::SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseEliminator::SparseVec out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->first < xi->first)) {
      out.push_back(std::move(*yi));
      ++yi;
    } else if (yi == y.end() || xi->first < yi->first) {
      out.emplace_back(xi->first, a * xi->second);
      ++xi;
    } else {
      Rat v = yi->second + a * xi->second;
      if (!v.is_zero()) out.emplace_back(yi->first, std::move(v));
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

const Rat* find_row(const SparseEliminator::SparseVec& v, int row) {
  auto it = std::lower_bound(v.begin(), v.end(), row,
                             [](const auto& p, int r) { return p.first < r; });
  return (it != v.end() && it->first == row) ? &it->second : nullptr;
}

}  // namespace

void SparseEliminator::reduce(SparseVec& c, std::map<int, Rat>* combo) const {
  for (const auto& p : pivots_) {
    const Rat* entry = find_row(c, p.row);
    if (!entry) continue;
    Rat f = *entry;
    axpy(c, -f, p.col);
    if (combo)
      for (const auto& [id, w] : p.combo) {
        auto [it, fresh] = combo->emplace(id, Rat(0));
        it->second -= f * w;
        if (it->second.is_zero()) combo->erase(it);
      }
  }
}

bool SparseEliminator::add_column(int id, SparseVec col) {
  std::map<int, Rat> combo{{id, Rat(1)}};
  reduce(col, &combo);
  if (col.empty()) return false;
  // pivot on the highest row id: recently discovered rows are the likeliest
  // to be unique to this column, which keeps fill-in low
  const Rat pval = col.back().second;
  int prow = col.back().first;
  if (!pval.is_one()) {
    for (auto& [row, val] : col) val /= pval;
    for (auto& [cid, w] : combo) w /= pval;
  }
  pivots_.push_back({prow, std::move(col), std::move(combo)});
  return true;
}

SparseEliminator::Solution SparseEliminator::solve(SparseVec target) const {
  Solution s;
  for (const auto& p : pivots_) {
    const Rat* entry = find_row(target, p.row);
    if (!entry) continue;
    Rat f = *entry;
    axpy(target, -f, p.col);
    for (const auto& [id, w] : p.combo) {
      auto [it, fresh] = s.x.emplace(id, Rat(0));
      it->second += f * w;
      if (it->second.is_zero()) s.x.erase(it);
    }
  }
  s.consistent = target.empty();
  s.residual = std::move(target);
  return s;
}

namespace {

struct RowKey {
  Mono alpha;
  Mono mono;
  int parity;  // 0 = even part, 1 = coefficient of r
  int block;
  bool operator==(const RowKey& o) const = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const {
    MonoHash h;
    std::size_t a = h(k.alpha), b = h(k.mono);
    return a ^ (b * 0x9e3779b97f4a7c15ull +
                static_cast<std::size_t>(k.parity * 977 + k.block * 31));
  }
};

struct Entry {
  Mono alpha;
  Mono mono;
  int parity;
  Rat value;
};

// Flatten an operator into rows, padding every coefficient at a given
// derivative index to the common rho power for that index.
std::vector<Entry> flatten(const DiffOp& op, const std::unordered_map<Mono, int, MonoHash>& kmax,
                           int n) {
  std::vector<Entry> out;
  std::vector<Poly> rho_pows{Poly::constant(Rat(1))};
  auto rho_pow = [&](int pad) -> const Poly& {
    while (static_cast<int>(rho_pows.size()) <= pad)
      rho_pows.push_back(rho_pows.back() * FieldElem::rho(n));
    return rho_pows[static_cast<std::size_t>(pad)];
  };
  for (const auto& [alpha, f] : op.terms()) {
    int pad = kmax.at(alpha) - f.rho_power();
    const Poly& scale = rho_pow(pad);
    Poly a = f.even_part() * scale;
    Poly b = f.odd_part() * scale;
    for (const auto& [m, c] : a.terms()) out.push_back({alpha, m, 0, c});
    for (const auto& [m, c] : b.terms()) out.push_back({alpha, m, 1, c});
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> FitOutcome::table(int n) const {
  auto names = VarLayout(n).names();
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.emplace_back(c.label, c.value.str(names));
  return out;
}

std::vector<Mono> coefficient_monomials(const std::vector<int>& vars, int max_degree) {
  std::vector<Mono> out{Mono::one()};
  std::vector<Mono> frontier = out;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Mono> next;
    for (const auto& m : frontier)
      for (int g : vars) {
        Mono mm = m.times(Mono::var(g));
        if (std::find(next.begin(), next.end(), mm) == next.end()) next.push_back(mm);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

FitOutcome fit_linear_system(const std::vector<DiffOp>& targets,
                             const std::vector<MultiAnsatzTerm>& basis,
                             const std::vector<Mono>& coeff_monomials) {
  if (targets.empty()) throw InvalidParameter("fit with no target blocks");
  const int n = targets.front().dim();
  const std::size_t blocks = targets.size();

  // common rho power per (block, derivative index)
  std::vector<std::unordered_map<Mono, int, MonoHash>> kmax(blocks);
  auto absorb = [&](std::size_t blk, const DiffOp& op) {
    for (const auto& [alpha, f] : op.terms()) {
      auto [it, fresh] = kmax[blk].emplace(alpha, f.rho_power());
      if (!fresh) it->second = std::max(it->second, f.rho_power());
    }
  };
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    absorb(blk, targets[blk]);
    for (const auto& b : basis) absorb(blk, b.ops[blk]);
  }

  std::unordered_map<RowKey, int, RowKeyHash> row_ids;
  auto row_of = [&](const RowKey& k) {
    auto [it, fresh] = row_ids.emplace(k, static_cast<int>(row_ids.size()));
    return it->second;
  };

  auto to_sorted = [](std::unordered_map<int, Rat>&& acc) {
    SparseEliminator::SparseVec v;
    v.reserve(acc.size());
    for (auto& [row, val] : acc)
      if (!val.is_zero()) v.emplace_back(row, std::move(val));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };

  SparseEliminator elim;
  const int mu_count = static_cast<int>(coeff_monomials.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<std::vector<Entry>> entries(blocks);
    bool nonzero = false;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      entries[blk] = flatten(basis[j].ops[blk], kmax[blk], n);
      nonzero = nonzero || !entries[blk].empty();
    }
    if (!nonzero) continue;  // zero basis operator contributes nothing
    for (int mu = 0; mu < mu_count; ++mu) {
      const Mono& mu_mono = coeff_monomials[static_cast<std::size_t>(mu)];
      std::unordered_map<int, Rat> acc;
      for (std::size_t blk = 0; blk < blocks; ++blk)
        for (const auto& e : entries[blk]) {
          int row = row_of({e.alpha, e.mono.times(mu_mono), e.parity, static_cast<int>(blk)});
          auto [it, fresh] = acc.emplace(row, e.value);
          if (!fresh) it->second += e.value;
        }
      elim.add_column(static_cast<int>(j) * mu_count + mu, to_sorted(std::move(acc)));
    }
  }

  std::unordered_map<int, Rat> tacc;
  for (std::size_t blk = 0; blk < blocks; ++blk)
    for (const auto& e : flatten(targets[blk], kmax[blk], n)) {
      int row = row_of({e.alpha, e.mono, e.parity, static_cast<int>(blk)});
      auto [it, fresh] = tacc.emplace(row, e.value);
      if (!fresh) it->second += e.value;
    }

  SparseEliminator::Solution sol = elim.solve(to_sorted(std::move(tacc)));

  FitOutcome out;
  out.consistent = sol.consistent;
  std::vector<Poly> coeff_polys(basis.size());
  for (const auto& [col, val] : sol.x) {
    std::size_t j = static_cast<std::size_t>(col / mu_count);
    const Mono& mu = coeff_monomials[static_cast<std::size_t>(col % mu_count)];
    coeff_polys[j].add_term(mu, val);
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeff_polys[j].is_zero()) continue;
    out.coefficients.push_back({j, basis[j].label, std::move(coeff_polys[j])});
  }
  return out;
}

FitOutcome fit_linear_combination(const DiffOp& target, const std::vector<AnsatzTerm>& basis,
                                  const std::vector<Mono>& coeff_monomials) {
  const int n = target.dim();
  std::vector<MultiAnsatzTerm> mbasis;
  mbasis.reserve(basis.size());
  for (const auto& b : basis) mbasis.push_back({b.label, {b.op}});
  FitOutcome out = fit_linear_system({target}, mbasis, coeff_monomials);

  DiffOp recomb = DiffOp::zero(n);
  for (const auto& c : out.coefficients)
    recomb += basis[c.index].op.times(FieldElem::from_poly(n, c.value));
  out.recombination = recomb;
  out.residual = target - recomb;
  return out;
}

}  // namespace kc
