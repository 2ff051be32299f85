#pragma once

#include "kc/qalg.hpp"

namespace kc {

// Casimir of the (Y_1, X) sub-structure, assembled from the printed cubic
// combination of C_1, Y_1, X and the central elements.
DiffOp build_K1(int n);
// The same Casimir written in central elements only (H, Z_{n-2}).
DiffOp k1_central_form(int n);

std::vector<VerifyReport> verify_K1_centrality(int n);
VerifyReport verify_K1_central_form(int n, bool with_fit = false);

// Casimir of the (Y_i, Z_{i-1}) sub-structure as printed.
DiffOp build_Ki(int n, int i);
// Central-element form (Y_1, Y_{i+1}, Z_{i-2} and beta_i only).
DiffOp ki_central_form(int n, int i);

// Empirical resolution of the sub-structure-i Casimir: the printed cubic
// combination when it is central, otherwise the exact undetermined-
// coefficients reconstruction from C_i^2 (corrected_table then holds the
// correction coefficients).
struct KiResolution {
  int n = 0;
  int i = 0;
  bool printed_central = false;
  bool resolved = false;  // some exact Casimir of the form C^2 + cubic exists
  DiffOp casimir;
  std::vector<std::pair<std::string, std::string>> corrected_table;
};
KiResolution resolve_Ki(int n, int i);

std::vector<VerifyReport> verify_Ki_centrality(int n, int i,
                                               const KiResolution* pre = nullptr);
VerifyReport verify_Ki_central_form(int n, int i, bool with_fit = false,
                                    const KiResolution* pre = nullptr);

// Exact cubic fit of a target over monomials of the given central elements
// (total degree <= 3), coefficients polynomial in coeff_vars of degree <= 2.
FitOutcome fit_central_cubic(const DiffOp& target,
                             const std::vector<std::pair<std::string, DiffOp>>& centrals, int n,
                             std::vector<int> coeff_vars);

// Undetermined-coefficients construction of a Casimir: K = C^2 + (cubic
// combination of the generators and centrals) with [K, A] = [K, B] = 0.
// Returns the correction term and its consistency; build succeeds when some
// exact central combination exists.
struct CasimirFit {
  bool found = false;
  DiffOp casimir;
  std::vector<std::pair<std::string, std::string>> table;
};
CasimirFit fit_casimir(const DiffOp& c_sq, const std::string& label_a, const DiffOp& a,
                       const std::string& label_b, const DiffOp& b,
                       const std::vector<std::pair<std::string, DiffOp>>& centrals, int n,
                       std::vector<int> coeff_vars);

}  // namespace kc
