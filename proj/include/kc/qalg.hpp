#pragma once

#include <string>
#include <vector>

#include "kc/integrals.hpp"
#include "kc/linsolve.hpp"
#include "kc/report.hpp"

namespace kc {

// Pairwise commutators among {H, X, Y_1..Y_{n-1}, Z_0..Z_{n-2}}.
struct CommutatorTable {
  std::vector<std::string> labels;
  std::vector<DiffOp> generators;
  std::vector<std::vector<DiffOp>> table;  // table[a][b] = [gen_a, gen_b]
};
CommutatorTable commutator_table(int n);

// Commuting-set relations among the integrals ([X,Z], [Z,Z], [Y,Y], [Y_1,Z]),
// aggregated into one report per dimension.
VerifyReport verify_cartan(int n);

// [H, X] = [H, Z_l] = [H, Y_p] = 0, aggregated per dimension.
VerifyReport verify_h_commutation(int n);

// The two closure relations of the (Y_1, X) sub-structure. When with_fit is
// set (or a relation fails), the undetermined-coefficients table is attached.
std::vector<VerifyReport> verify_substructure1(int n, bool with_fit = false);

// The closure relations of the (Y_i, Z_{i-1}) sub-structure plus the
// centrality of Y_1, Y_{i+1}, Z_{i-2}.
std::vector<VerifyReport> verify_substructure_i(int n, int i, bool with_fit = false);

// Most generic quadratic ansatz fit: target expressed over the basis
// {1, A, B, A^2, B^2, {A,B}} x {1, centrals, pairwise central products} with
// coefficients polynomial of total degree <= 2 in coeff_vars (an explicit
// variable subset; when empty, all beta generators plus gamma). If the
// restricted fit is inconsistent the ansatz widens to all betas and gamma.
FitOutcome fit_quadratic_ansatz(const DiffOp& target, const std::string& label_a, const DiffOp& a,
                                const std::string& label_b, const DiffOp& b,
                                const std::vector<std::pair<std::string, DiffOp>>& centrals, int n,
                                std::vector<int> coeff_vars = {});

}  // namespace kc
