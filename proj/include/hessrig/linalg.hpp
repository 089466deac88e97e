#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hessrig {

/// Dense real symmetric matrix. Only the lower triangle is stored, so
/// symmetry is structural: materializing the full matrix is A = A^T exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n);

  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(std::span<const double> d);
  // Builds from full rows; |a_ij - a_ji| must not exceed sym_tol * max(1, max|a|).
  // Off-diagonal pairs are averaged.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                   double sym_tol = 0.0);
  // A = Q diag(d) Q^T from orthonormal columns q[k].
  static SymmetricMatrix from_spectrum(const std::vector<std::vector<double>>& q,
                                       std::span<const double> d);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double v);

  double trace() const;
  double frobenius_norm() const;
  bool is_finite() const;

  SymmetricMatrix scaled(double c) const;
  SymmetricMatrix minus(const SymmetricMatrix& other) const;  // *this - other

  const std::vector<double>& packed() const { return a_; }
  std::vector<std::vector<double>> to_rows() const;

 private:
  std::size_t n_;
  std::vector<double> a_;  // lower triangle, row-major: (i,j), j <= i
};

/// An n-variable real function with optional exact gradient/Hessian oracles.
/// Unset oracles are empty std::functions; numeric fallbacks apply.
struct ScalarField {
  std::size_t n = 0;
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;
  std::function<SymmetricMatrix(std::span<const double>)> hessian;
};

struct EigenDecomposition {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi rotations. Converges to off-diagonal Frobenius norm
/// <= 1e-14 * ||A||_F within a cap of 100 sweeps (overridable for tests);
/// throws if the residual guarantee tol * max(1, ||A||_F) is not met.
/// Deterministic: identical input bits give identical output bits.
EigenDecomposition eigen_symmetric(const SymmetricMatrix& A, double tol = 1e-10,
                                   std::size_t max_sweeps = 100);
std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& A,
                                          double tol = 1e-10);

/// True iff the smallest eigenvalue is >= -tol * max(1, ||A||_F).
bool is_psd(const SymmetricMatrix& A, double tol = 1e-12);

/// Loewner order: A <= B iff B - A is PSD (per is_psd with the same tol).
bool loewner_leq(const SymmetricMatrix& A, const SymmetricMatrix& B,
                 double tol = 1e-12);

/// Central second differences on the 2n^2-point stencil:
/// diagonal (f(x+h e_i) - 2 f(x) + f(x-h e_i)) / h^2, off-diagonal the
/// 4-point cross stencil. Symmetric by construction. Throws on a
/// non-finite field value at any stencil point.
SymmetricMatrix hessian_fd(const ScalarField& f, std::span<const double> x,
                           double h = 1e-4);

/// Exact Hessian oracle when the field carries one, hessian_fd otherwise.
SymmetricMatrix field_hessian(const ScalarField& f, std::span<const double> x,
                              double fd_step = 1e-4);

}  // namespace hessrig
