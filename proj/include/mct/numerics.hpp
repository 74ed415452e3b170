#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mct {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> data() const { return data_; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  std::vector<double> operator*(std::span<const double> x) const;

  DenseMatrix transposed() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting. Throws
/// Error(SingularMatrix) when a pivot falls below 1e-13 * max|A|.
std::vector<double> solve_linear(const DenseMatrix& a, std::span<const double> b);

double max_abs_residual(const DenseMatrix& a, std::span<const double> x, std::span<const double> b);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr int kMaxQuadratureDepth = 60;

/// Adaptive Simpson quadrature of f over [lo, hi]. Throws Error(MaxDepth) when
/// the subdivision depth limit is reached and Error(NonFinite) when f returns a
/// non-finite value.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double tol = kDefaultQuadratureTol);

/// As integrate(), but first splits [lo, hi] at the given interior points
/// (jumps or kinks of f) and spends the tolerance proportionally to length.
QuadratureResult integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                                     std::vector<double> cuts, double tol = kDefaultQuadratureTol);

}  // namespace mct
