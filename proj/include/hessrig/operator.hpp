#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hessrig/linalg.hpp"

namespace hessrig {

/// One non-zero coefficient a_i(x) of L[f] = sum_i a_i(x) S_i(Hess f).
/// The field value carries the sign; the declared sign and the pinching
/// bounds 0 < mu1 <= |a_i(x)| <= mu2 are metadata validated against samples.
struct ActiveCoefficient {
  ScalarField a;
  int sign = +1;  // +1 or -1
  double mu1 = 1.0;
  double mu2 = 1.0;
};

/// Operator L with per-index coefficients; index i in 1..n, entry i-1.
/// A disengaged entry means a_i is identically zero.
class HessianOperator {
 public:
  HessianOperator(std::size_t n, std::vector<std::optional<ActiveCoefficient>> coeffs,
                  bool constant_coeffs = false);

  std::size_t dim() const { return n_; }
  const std::vector<std::size_t>& active_indices() const { return J_; }  // 1-based
  bool is_active(std::size_t i) const;
  const ActiveCoefficient& coefficient(std::size_t i) const;  // 1-based
  bool has_constant_coefficients() const { return constant_coeffs_; }

 private:
  std::size_t n_;
  std::vector<std::optional<ActiveCoefficient>> coeffs_;
  std::vector<std::size_t> J_;
  bool constant_coeffs_;
};

/// sum_{i in J} a_i(x) S_i(A), with a_i evaluated as its (signed) field value.
double residual_matrix(const HessianOperator& op, std::span<const double> x,
                       const SymmetricMatrix& A);

/// residual_matrix at Hess f(x): the exact Hessian oracle when present,
/// hessian_fd(f, x, fd_step) otherwise.
double residual_field(const HessianOperator& op, const ScalarField& f,
                      std::span<const double> x, double fd_step = 1e-4);

/// Per-sample pinching validation: mu1*(1-tol) <= |a_i(x)| <= mu2*(1+tol)
/// and sign(a_i(x)) equal to the declared sign, for every active index.
struct ConditionQViolation {
  enum class Kind { below_mu1, above_mu2, sign_flip };
  std::size_t index = 0;  // 1-based coefficient index
  std::vector<double> point;
  Kind kind = Kind::below_mu1;
};
struct ConditionQReport {
  bool ok = true;
  std::vector<ConditionQViolation> violations;
};
ConditionQReport validate_condition_Q(const HessianOperator& op,
                                      const std::vector<std::vector<double>>& samples,
                                      double tol);

/// Opposite-sign partition of J, oriented so the side holding min(J) is the
/// plus side (hence i1 < j1). ratio_bound = max(mu2 over minus) / mu1(i1).
struct SignSplit {
  std::vector<std::size_t> plus_side;   // ascending, leader i1 = plus_side[0]
  std::vector<std::size_t> minus_side;  // ascending
  double ratio_bound = 1.0;
};
struct AllSameSign {
  int sign = +1;
};
using SignStructure = std::variant<AllSameSign, SignSplit>;

/// AllSameSign when every active declared sign agrees (then any PSD solution
/// of L(A)=0 forces S_i(A)=0 on J); the oriented SignSplit otherwise.
SignStructure classify_sign_structure(const HessianOperator& op);

// Built-in constant-coefficient operators (mu1 = mu2 = 1 on each active index).

/// S_n(Hess f) - S_1(Hess f), i.e. det Hess f - Laplacian. Requires n >= 2.
HessianOperator det_minus_laplacian(std::size_t n);

/// sum_{k>=0, 2k+1<=n} (-1)^k S_{2k+1}(Hess f). Requires n >= 1.
HessianOperator alternating_odd(std::size_t n);

/// Homogeneous operator plus a constant right-hand side; residual = L - rhs.
struct ShiftedOperator {
  HessianOperator op;
  double rhs = 0.0;
};
double residual_matrix(const ShiftedOperator& sop, std::span<const double> x,
                       const SymmetricMatrix& A);
double residual_field(const ShiftedOperator& sop, const ScalarField& f,
                      std::span<const double> x, double fd_step = 1e-4);

/// det Hess f = 1 as the shifted operator S_n(Hess f) - 1. Requires n >= 2.
ShiftedOperator monge_ampere_unit(std::size_t n);

}  // namespace hessrig
