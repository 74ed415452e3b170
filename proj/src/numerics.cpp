#include "mct/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "mct/error.hpp"

namespace mct {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::InvalidArgument, "matrix product shape mismatch");
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::InvalidArgument, "matrix difference shape mismatch");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != cols_) throw Error(Errc::InvalidArgument, "matrix-vector shape mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> solve_linear(const DenseMatrix& a, std::span<const double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw Error(Errc::InvalidArgument, "solve_linear needs a square system");
  const double scale = a.max_abs();
  const double threshold = 1e-13 * scale;
  if (scale == 0.0) throw Error(Errc::SingularMatrix, "zero matrix");

  DenseMatrix m = a;
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (!(std::abs(m(piv, col)) >= threshold))
      throw Error(Errc::SingularMatrix, "pivot below threshold in column " + std::to_string(col));
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      std::swap(x[col], x[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      m(r, col) = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
      x[r] -= f * x[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

double max_abs_residual(const DenseMatrix& a, std::span<const double> x, std::span<const double> b) {
  const auto ax = a * x;
  double r = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - b[i]));
  return r;
}

namespace {

constexpr int kMinQuadratureDepth = 2;

class Simpson {
 public:
  explicit Simpson(const std::function<double(double)>& f) : f_(f) {}

  double eval(double x) {
    const double y = f_(x);
    ++result_.evaluations;
    if (!std::isfinite(y))
      throw Error(Errc::NonFinite, "integrand is not finite at t = " + std::to_string(x));
    return y;
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= kMinQuadratureDepth && std::abs(delta) <= 15.0 * tol) {
      result_.error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth >= kMaxQuadratureDepth)
      throw Error(Errc::MaxDepth, "adaptive Simpson reached depth " +
                                      std::to_string(kMaxQuadratureDepth) + " near t = " +
                                      std::to_string(m));
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  // With open_ends the endpoint samples are taken one ulp inside, so a jump
  // exactly at lo or hi contributes its one-sided limit.
  QuadratureResult run(double lo, double hi, double tol, bool open_ends) {
    const double fa = eval(open_ends ? std::nextafter(lo, hi) : lo);
    const double fb = eval(open_ends ? std::nextafter(hi, lo) : hi);
    const double fm = eval(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    result_.value = recurse(lo, hi, fa, fm, fb, whole, tol, 0);
    return result_;
  }

 private:
  const std::function<double(double)>& f_;
  QuadratureResult result_;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  if (!(lo <= hi)) throw Error(Errc::InvalidArgument, "integrate requires lo <= hi");
  if (lo == hi) return {};
  return Simpson(f).run(lo, hi, tol, false);
}

QuadratureResult integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                                     std::vector<double> cuts, double tol) {
  if (!(lo <= hi)) throw Error(Errc::InvalidArgument, "integrate requires lo <= hi");
  if (lo == hi) return {};
  std::erase_if(cuts, [&](double x) { return !(x > lo && x < hi); });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(hi);

  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double share = tol * (cuts[i + 1] - cuts[i]) / (hi - lo);
    const auto piece = Simpson(f).run(cuts[i], cuts[i + 1], share, true);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.evaluations += piece.evaluations;
  }
  return total;
}

}  // namespace mct
