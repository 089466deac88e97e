#include "hessrig/symmfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hessrig {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * double(n - k + i) / double(i);
  return std::round(c);
}

std::vector<double> elementary_symmetric_all(std::span<const double> eigs) {
  const std::size_t n = eigs.size();
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  std::size_t m = 0;
  for (double lam : eigs) {
    ++m;
    for (std::size_t k = m; k >= 1; --k) c[k] += lam * c[k - 1];
  }
  return c;
}

double elementary_symmetric(std::span<const double> eigs, std::size_t k) {
  if (k > eigs.size())
    throw std::invalid_argument("elementary_symmetric: k out of range (k=" +
                                std::to_string(k) + ", n=" + std::to_string(eigs.size()) + ")");
  return elementary_symmetric_all(eigs)[k];
}

SymmSpectrum symm_of_matrix(const SymmetricMatrix& A) {
  SymmSpectrum spec;
  spec.n = A.dim();
  spec.s = elementary_symmetric_all(eigenvalues_symmetric(A));
  return spec;
}

double maclaurin_mean(const SymmSpectrum& spec, std::size_t k) {
  if (k < 1 || k > spec.n)
    throw std::invalid_argument("maclaurin_mean: k out of range (k=" +
                                std::to_string(k) + ", n=" + std::to_string(spec.n) + ")");
  return spec.s[k] / binomial(spec.n, k);
}

MaclaurinReport check_maclaurin_chain(const SymmetricMatrix& A, double tol) {
  if (tol < 0.0) throw std::invalid_argument("check_maclaurin_chain: tol must be >= 0");
  auto eigs = eigenvalues_symmetric(A);
  const double floor = tol * std::max(1.0, A.frobenius_norm());
  MaclaurinReport rep;
  for (double& lam : eigs) {
    if (lam < -floor)
      throw std::invalid_argument(
          "check_maclaurin_chain: matrix is not PSD (eigenvalue " +
          std::to_string(lam) + " below -" + std::to_string(floor) + ")");
    if (lam < 0.0) {
      lam = 0.0;
      rep.clamped = true;
    }
  }

  const std::size_t n = A.dim();
  const auto s = elementary_symmetric_all(eigs);
  std::vector<double> p(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) p[k] = s[k] / binomial(n, k);

  rep.holds = true;
  rep.all_equal = true;
  bool first = true;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = m; k <= n; ++k) {
      const double lhs = std::pow(p[k], double(m));
      const double rhs = std::pow(p[m], double(k));
      const double slack = rhs * (1.0 + tol) - lhs;
      if (slack < 0.0) rep.holds = false;
      if (std::abs(lhs - rhs) > tol * std::max(lhs, rhs)) rep.all_equal = false;
      if (first || slack < rep.worst_slack) {
        rep.worst_slack = slack;
        rep.worst_m = m;
        rep.worst_k = k;
        first = false;
      }
    }
  return rep;
}

MajorizationReport majorization_bound(const SymmetricMatrix& A, double eps, double tol) {
  if (eps < 0.0) throw std::invalid_argument("majorization_bound: eps must be >= 0");
  const std::size_t n = A.dim();
  MajorizationReport rep;
  if (!is_psd(A, tol)) {
    rep.message = "precondition failed: A is not PSD";
    return rep;
  }
  if (!loewner_leq(A, SymmetricMatrix::identity(n).scaled(eps), tol)) {
    rep.message = "precondition failed: A <= eps*I does not hold";
    return rep;
  }
  rep.precondition_ok = true;
  rep.holds = true;
  const auto s = symm_of_matrix(A).s;
  rep.per_k_slack.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double bound = std::pow(eps, double(k)) * binomial(n, k);
    rep.per_k_slack[k - 1] = bound * (1.0 + tol) - s[k];
    if (rep.per_k_slack[k - 1] < 0.0) {
      rep.holds = false;
      rep.message = "bound violated at k=" + std::to_string(k);
    }
  }
  return rep;
}

}  // namespace hessrig
