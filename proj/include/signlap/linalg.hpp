#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace signlap {

using Vector = std::vector<double>;

/// Square, row-major, finite-valued matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  /// Throws std::invalid_argument on a non-square shape or non-finite entry.
  static DenseMatrix from_rows(const std::vector<Vector>& rows);
  static DenseMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::vector<Vector> rows() const;

  Vector operator*(std::span<const double> x) const;
  DenseMatrix operator*(const DenseMatrix& other) const;

  double frobenius_norm() const;
  /// Frobenius norm of the strictly off-diagonal part.
  double off_diagonal_norm() const;
  bool is_symmetric(double tol = 0.0) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Eigenpairs of a real symmetric matrix, eigenvalues ascending; eigenvectors
/// are Euclidean-orthonormal.
struct SymmetricEigen {
  Vector values;
  std::vector<Vector> vectors;
  int sweeps = 0;
};

struct JacobiOptions {
  /// Stop once off(A) <= rel_tol * ||A||_F.
  double rel_tol = 1e-12;
  int max_sweeps = 100;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic Jacobi rotations. Throws ConvergenceError after `max_sweeps`.
SymmetricEigen jacobi_eigh(const DenseMatrix& a, JacobiOptions opts = {});

// Small vector helpers shared by the numeric modules.
double dot(std::span<const double> a, std::span<const double> b);
/// Σ a(x) b(x) w(x).
double weighted_dot(std::span<const double> a, std::span<const double> b, std::span<const double> w);
double max_abs(std::span<const double> a);
Vector axpby(double alpha, std::span<const double> x, double beta, std::span<const double> y);

}  // namespace signlap
