#include "hessrig/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hessrig/symmfn.hpp"

namespace hessrig {

HessianOperator::HessianOperator(std::size_t n,
                                 std::vector<std::optional<ActiveCoefficient>> coeffs,
                                 bool constant_coeffs)
    : n_(n), coeffs_(std::move(coeffs)), constant_coeffs_(constant_coeffs) {
  if (n_ == 0) throw std::invalid_argument("HessianOperator: dimension must be >= 1");
  if (coeffs_.size() != n_)
    throw std::invalid_argument("HessianOperator: need one coefficient entry per index 1..n");
  for (std::size_t i = 0; i < n_; ++i) {
    if (!coeffs_[i]) continue;
    const auto& c = *coeffs_[i];
    if (c.sign != 1 && c.sign != -1)
      throw std::invalid_argument("HessianOperator: sign must be +1 or -1");
    if (!(c.mu1 > 0.0) || !(c.mu2 >= c.mu1) || !std::isfinite(c.mu2))
      throw std::invalid_argument("HessianOperator: need 0 < mu1 <= mu2 < inf");
    if (!c.a.value)
      throw std::invalid_argument("HessianOperator: active coefficient lacks a value oracle");
    J_.push_back(i + 1);
  }
  if (J_.empty()) throw std::invalid_argument("HessianOperator: index set J is empty");
}

bool HessianOperator::is_active(std::size_t i) const {
  return i >= 1 && i <= n_ && coeffs_[i - 1].has_value();
}

const ActiveCoefficient& HessianOperator::coefficient(std::size_t i) const {
  if (!is_active(i))
    throw std::invalid_argument("HessianOperator: index " + std::to_string(i) +
                                " is not active");
  return *coeffs_[i - 1];
}

double residual_matrix(const HessianOperator& op, std::span<const double> x,
                       const SymmetricMatrix& A) {
  if (A.dim() != op.dim())
    throw std::invalid_argument("residual_matrix: matrix dimension mismatch");
  const auto s = symm_of_matrix(A).s;
  double r = 0.0;
  for (std::size_t i : op.active_indices()) {
    const double ai = op.coefficient(i).a.value(x);
    if (!std::isfinite(ai))
      throw std::runtime_error("residual_matrix: non-finite coefficient a_" +
                               std::to_string(i));
    r += ai * s[i];
  }
  return r;
}

double residual_field(const HessianOperator& op, const ScalarField& f,
                      std::span<const double> x, double fd_step) {
  return residual_matrix(op, x, field_hessian(f, x, fd_step));
}

ConditionQReport validate_condition_Q(const HessianOperator& op,
                                      const std::vector<std::vector<double>>& samples,
                                      double tol) {
  if (samples.empty())
    throw std::invalid_argument("validate_condition_Q: empty sample set");
  ConditionQReport rep;
  for (std::size_t i : op.active_indices()) {
    const auto& c = op.coefficient(i);
    for (const auto& x : samples) {
      const double v = c.a.value(x);
      const double av = std::abs(v);
      if (av < c.mu1 * (1.0 - tol))
        rep.violations.push_back({i, x, ConditionQViolation::Kind::below_mu1});
      if (av > c.mu2 * (1.0 + tol))
        rep.violations.push_back({i, x, ConditionQViolation::Kind::above_mu2});
      if (!(v * c.sign > 0.0))
        rep.violations.push_back({i, x, ConditionQViolation::Kind::sign_flip});
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

SignStructure classify_sign_structure(const HessianOperator& op) {
  const auto& J = op.active_indices();
  std::vector<std::size_t> pos, neg;
  for (std::size_t i : J)
    (op.coefficient(i).sign > 0 ? pos : neg).push_back(i);
  if (pos.empty() || neg.empty())
    return AllSameSign{pos.empty() ? -1 : +1};

  // Orientation: the side containing min(J) is the plus side, so i1 < j1.
  SignSplit split;
  const bool min_is_pos = !pos.empty() && pos.front() == J.front();
  split.plus_side = min_is_pos ? pos : neg;
  split.minus_side = min_is_pos ? neg : pos;
  double worst_mu2 = 0.0;
  for (std::size_t j : split.minus_side)
    worst_mu2 = std::max(worst_mu2, op.coefficient(j).mu2);
  split.ratio_bound = worst_mu2 / op.coefficient(split.plus_side.front()).mu1;
  return split;
}

namespace {

ScalarField constant_field(std::size_t n, double v) {
  ScalarField f;
  f.n = n;
  f.value = [v](std::span<const double>) { return v; };
  return f;
}

std::optional<ActiveCoefficient> unit_coeff(std::size_t n, int sign) {
  return ActiveCoefficient{constant_field(n, double(sign)), sign, 1.0, 1.0};
}

}  // namespace

HessianOperator det_minus_laplacian(std::size_t n) {
  if (n < 2) throw std::invalid_argument("det_minus_laplacian: requires n >= 2");
  std::vector<std::optional<ActiveCoefficient>> coeffs(n);
  coeffs[0] = unit_coeff(n, -1);
  coeffs[n - 1] = unit_coeff(n, +1);
  return HessianOperator(n, std::move(coeffs), /*constant_coeffs=*/true);
}

HessianOperator alternating_odd(std::size_t n) {
  if (n < 1) throw std::invalid_argument("alternating_odd: requires n >= 1");
  std::vector<std::optional<ActiveCoefficient>> coeffs(n);
  int sign = +1;
  for (std::size_t i = 1; i <= n; i += 2, sign = -sign)
    coeffs[i - 1] = unit_coeff(n, sign);
  return HessianOperator(n, std::move(coeffs), /*constant_coeffs=*/true);
}

double residual_matrix(const ShiftedOperator& sop, std::span<const double> x,
                       const SymmetricMatrix& A) {
  return residual_matrix(sop.op, x, A) - sop.rhs;
}

double residual_field(const ShiftedOperator& sop, const ScalarField& f,
                      std::span<const double> x, double fd_step) {
  return residual_field(sop.op, f, x, fd_step) - sop.rhs;
}

ShiftedOperator monge_ampere_unit(std::size_t n) {
  if (n < 2) throw std::invalid_argument("monge_ampere_unit: requires n >= 2");
  std::vector<std::optional<ActiveCoefficient>> coeffs(n);
  coeffs[n - 1] = unit_coeff(n, +1);
  return ShiftedOperator{HessianOperator(n, std::move(coeffs), /*constant_coeffs=*/true),
                         1.0};
}

}  // namespace hessrig
