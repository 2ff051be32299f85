#pragma once

#include <map>
#include <string>
#include <vector>

#include "kc/diffop.hpp"

namespace kc {

// Sparse exact Gauss elimination over Rat with a fixed column priority:
// columns are offered in order, each reduced against the pivots created so
// far; dependent columns stay free and resolve to zero in the solution.
class SparseEliminator {
 public:
  using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by row id

  // Offer the next column (sorted rows). Returns true if it became a pivot.
  bool add_column(int id, SparseVec col);

  struct Solution {
    bool consistent = false;
    std::map<int, Rat> x;  // column id -> value (free columns omitted)
    SparseVec residual;
  };
  Solution solve(SparseVec target) const;

  std::size_t pivot_count() const { return pivots_.size(); }

 private:
  struct Pivot {
    int row;
    SparseVec col;             // normalized: entry at row == 1
    std::map<int, Rat> combo;  // expression over offered column ids
  };
  void reduce(SparseVec& c, std::map<int, Rat>* combo) const;
  std::vector<Pivot> pivots_;
};

struct AnsatzTerm {
  std::string label;
  DiffOp op;
};

// Result of an exact undetermined-coefficients fit. coefficients[k] pairs the
// basis index and label with its fitted coefficient, a polynomial over the
// allowed monomials (zero coefficients are omitted). When the system is
// inconsistent, the best pivoted solution is returned with its residual.
struct FitOutcome {
  bool consistent = false;
  struct Coeff {
    std::size_t index;  // into the basis as given
    std::string label;
    Poly value;
  };
  std::vector<Coeff> coefficients;
  DiffOp recombination;
  DiffOp residual;

  std::vector<std::pair<std::string, std::string>> table(int n) const;
};

// Solve target = sum_j c_j * basis_j exactly, where each c_j is a rational
// linear combination of coeff_monomials. Columns are processed basis-major in
// the given order; underdetermined directions resolve to zero on later columns.
FitOutcome fit_linear_combination(const DiffOp& target, const std::vector<AnsatzTerm>& basis,
                                  const std::vector<Mono>& coeff_monomials);

// Joint fit over several operator equations sharing one coefficient vector:
// for every block k, targets[k] = sum_j c_j * basis[j].ops[k]. Only the
// coefficients and consistency are reported.
struct MultiAnsatzTerm {
  std::string label;
  std::vector<DiffOp> ops;  // one per block
};
FitOutcome fit_linear_system(const std::vector<DiffOp>& targets,
                             const std::vector<MultiAnsatzTerm>& basis,
                             const std::vector<Mono>& coeff_monomials);

// All monomials in the given variables with total degree <= max_degree,
// ordered by (degree, lex).
std::vector<Mono> coefficient_monomials(const std::vector<int>& vars, int max_degree);

}  // namespace kc
