#include "hessrig/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hessrig {

namespace {

std::size_t packed_index(std::size_t i, std::size_t j) {
  if (j > i) std::swap(i, j);
  return i * (i + 1) / 2 + j;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), a_(n * (n + 1) / 2, 0.0) {
  if (n == 0) throw std::invalid_argument("SymmetricMatrix: dimension must be >= 1");
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  SymmetricMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                           double sym_tol) {
  const std::size_t n = rows.size();
  SymmetricMatrix m(n);
  double max_abs = 0.0;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("from_rows: matrix is not square");
    for (double v : r) max_abs = std::max(max_abs, std::abs(v));
  }
  const double allowed = sym_tol * std::max(1.0, max_abs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > allowed)
        throw std::invalid_argument("from_rows: matrix is not symmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      m.set(i, j, i == j ? rows[i][j] : 0.5 * (rows[i][j] + rows[j][i]));
    }
  return m;
}

SymmetricMatrix SymmetricMatrix::from_spectrum(const std::vector<std::vector<double>>& q,
                                               std::span<const double> d) {
  const std::size_t n = d.size();
  if (q.size() != n) throw std::invalid_argument("from_spectrum: size mismatch");
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += d[k] * q[k][i] * q[k][j];
      m.set(i, j, s);
    }
  return m;
}

double SymmetricMatrix::operator()(std::size_t i, std::size_t j) const {
  return a_[packed_index(i, j)];
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  a_[packed_index(i, j)] = v;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
  return std::sqrt(s);
}

bool SymmetricMatrix::is_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

SymmetricMatrix SymmetricMatrix::scaled(double c) const {
  SymmetricMatrix m(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = c * a_[k];
  return m;
}

SymmetricMatrix SymmetricMatrix::minus(const SymmetricMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("minus: dimension mismatch");
  SymmetricMatrix m(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - other.a_[k];
  return m;
}

std::vector<std::vector<double>> SymmetricMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

namespace {

double offdiag_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigen_symmetric(const SymmetricMatrix& A, double tol,
                                   std::size_t max_sweeps) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigen_symmetric: tol must be > 0");
  if (!A.is_finite()) throw std::invalid_argument("eigen_symmetric: non-finite entries");
  const std::size_t n = A.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = A(i, j);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double norm = A.frobenius_norm();
  const double target = 1e-14 * norm;

  for (std::size_t sweep = 0; sweep < max_sweeps && offdiag_norm(a, n) > target;
       ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = a[p * n + p], aqq = a[q * n + q];
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r * n + p], arq = a[r * n + q];
            a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
            a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
          }
          const double vrp = v[r * n + p], vrq = v[r * n + q];
          v[r * n + p] = vrp - s * (vrq + tau * vrp);
          v[r * n + q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  const double resid = offdiag_norm(a, n);
  if (resid > tol * std::max(1.0, norm))
    throw std::runtime_error(
        "eigen_symmetric: no convergence after " + std::to_string(max_sweeps) +
        " Jacobi sweeps (off-diagonal norm " + std::to_string(resid) + ")");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] < a[y * n + y];
  });

  EigenDecomposition d;
  d.values.resize(n);
  d.vectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    d.values[k] = a[order[k] * n + order[k]];
    for (std::size_t r = 0; r < n; ++r) d.vectors[k][r] = v[r * n + order[k]];
  }
  return d;
}

std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& A, double tol) {
  return eigen_symmetric(A, tol).values;
}

bool is_psd(const SymmetricMatrix& A, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_psd: tol must be >= 0");
  const auto eigs = eigenvalues_symmetric(A);
  return eigs.front() >= -tol * std::max(1.0, A.frobenius_norm());
}

bool loewner_leq(const SymmetricMatrix& A, const SymmetricMatrix& B, double tol) {
  if (A.dim() != B.dim()) throw std::invalid_argument("loewner_leq: dimension mismatch");
  return is_psd(B.minus(A), tol);
}

SymmetricMatrix hessian_fd(const ScalarField& f, std::span<const double> x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("hessian_fd: step must be > 0");
  if (!f.value) throw std::invalid_argument("hessian_fd: field has no value oracle");
  if (x.size() != f.n) throw std::invalid_argument("hessian_fd: point dimension mismatch");
  const std::size_t n = f.n;
  std::vector<double> p(x.begin(), x.end());
  auto eval = [&](const std::vector<double>& pt) {
    const double v = f.value(pt);
    if (!std::isfinite(v))
      throw std::runtime_error("hessian_fd: non-finite field value at stencil point");
    return v;
  };

  SymmetricMatrix H(n);
  const double f0 = eval(p);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = p[i];
    p[i] = xi + h;
    const double fp = eval(p);
    p[i] = xi - h;
    const double fm = eval(p);
    p[i] = xi;
    H.set(i, i, (fp - 2.0 * f0 + fm) / (h * h));
    for (std::size_t j = 0; j < i; ++j) {
      const double xj = p[j];
      p[i] = xi + h; p[j] = xj + h;
      const double fpp = eval(p);
      p[j] = xj - h;
      const double fpm = eval(p);
      p[i] = xi - h; p[j] = xj + h;
      const double fmp = eval(p);
      p[j] = xj - h;
      const double fmm = eval(p);
      p[i] = xi; p[j] = xj;
      H.set(i, j, (fpp - fpm - fmp + fmm) / (4.0 * h * h));
    }
  }
  return H;
}

SymmetricMatrix field_hessian(const ScalarField& f, std::span<const double> x,
                              double fd_step) {
  if (f.hessian) return f.hessian(x);
  return hessian_fd(f, x, fd_step);
}

}  // namespace hessrig
