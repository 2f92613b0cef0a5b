#include "signlap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace signlap {

DenseMatrix DenseMatrix::from_rows(const std::vector<Vector>& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!std::isfinite(rows[i][j])) throw std::invalid_argument("matrix entry is not finite");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Vector> DenseMatrix::rows() const {
  std::vector<Vector> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Vector DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) y[i] = dot(row(i), x);
  return y;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix-matrix dimension mismatch");
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

double DenseMatrix::frobenius_norm() const {
  return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

double DenseMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) s += (*this)(i, j) * (*this)(i, j);
  return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

SymmetricEigen jacobi_eigh(const DenseMatrix& input, JacobiOptions opts) {
  if (!input.is_symmetric(1e-14 * std::max(1.0, input.frobenius_norm()))) {
    throw std::invalid_argument("jacobi_eigh requires a symmetric matrix");
  }
  const std::size_t n = input.size();
  DenseMatrix a = input;
  DenseMatrix v = DenseMatrix::identity(n);
  const double threshold = opts.rel_tol * input.frobenius_norm();

  int sweep = 0;
  while (a.off_diagonal_norm() > threshold) {
    if (sweep == opts.max_sweeps) {
      throw ConvergenceError("Jacobi iteration did not converge in " + std::to_string(opts.max_sweeps) +
                             " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen so that the (p,q) entry vanishes; t is the
        // smaller root of t^2 + 2 t theta - 1 = 0.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.sweeps = sweep;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t col : order) {
    out.values.push_back(a(col, col));
    Vector vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v(k, col);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double weighted_dot(std::span<const double> a, std::span<const double> b, std::span<const double> w) {
  if (a.size() != b.size() || a.size() != w.size()) throw std::invalid_argument("weighted_dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * w[i];
  return s;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

Vector axpby(double alpha, std::span<const double> x, double beta, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpby: size mismatch");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + beta * y[i];
  return out;
}

}  // namespace signlap
