#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hessrig/linalg.hpp"

namespace hessrig {

/// All elementary symmetric functions of a matrix: s[k] = S_k(A), s[0] = 1.
/// S_1 is the trace, S_n the determinant.
struct SymmSpectrum {
  std::size_t n = 0;
  std::vector<double> s;  // size n+1
};

/// Binomial coefficient as a double (exact for the dimensions in scope).
double binomial(std::size_t n, std::size_t k);

/// S_k of an eigenvalue list via the incremental coefficients of
/// prod_i (t + lambda_i). Stable for ill-scaled spectra; S_0 = 1.
double elementary_symmetric(std::span<const double> eigs, std::size_t k);

/// All of S_0..S_n in one pass.
std::vector<double> elementary_symmetric_all(std::span<const double> eigs);

SymmSpectrum symm_of_matrix(const SymmetricMatrix& A);

/// Maclaurin normalized mean p_k = S_k / C(n,k), 1 <= k <= n.
double maclaurin_mean(const SymmSpectrum& spec, std::size_t k);

/// Check of (p_k)^m <= (p_m)^k * (1+tol) over all 1 <= m <= k <= n.
/// Eigenvalues in [-floor, 0) with floor = tol*max(1,||A||_F) are clamped
/// to 0 (recorded); anything below that is a precondition error.
struct MaclaurinReport {
  bool holds = false;
  std::size_t worst_m = 0, worst_k = 0;  // pair attaining worst_slack
  double worst_slack = 0.0;              // min over pairs of rhs*(1+tol) - lhs
  bool all_equal = false;                // every pair an equality within tol
  bool clamped = false;
};
MaclaurinReport check_maclaurin_chain(const SymmetricMatrix& A, double tol);

/// Asserts S_k(A) <= eps^k * C(n,k) * (1+tol) for all k, given 0 <= A <= eps I.
/// A precondition failure is reported distinctly from a bound violation.
struct MajorizationReport {
  bool precondition_ok = false;
  bool holds = false;
  std::vector<double> per_k_slack;  // k=1..n: eps^k*C(n,k)*(1+tol) - S_k(A)
  std::string message;
};
MajorizationReport majorization_bound(const SymmetricMatrix& A, double eps, double tol);

}  // namespace hessrig
