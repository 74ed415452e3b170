#include "mct/spectral.hpp"

#include <cmath>

#include "mct/error.hpp"

namespace mct::spectral {

namespace {

void validate(const RateQuad& r) {
  for (double v : {r.mu, r.nu, r.sigma, r.tau})
    if (!(std::isfinite(v) && v > 0.0))
      throw Error(Errc::UnsupportedParam, "all four rates must be positive and finite");
}

template <std::size_t R, std::size_t K, std::size_t C>
std::array<std::array<double, C>, R> product(const std::array<std::array<double, K>, R>& a,
                                             const std::array<std::array<double, C>, K>& b) {
  std::array<std::array<double, C>, R> out{};
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      for (std::size_t k = 0; k < K; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

Block4x3 u1(const RateQuad& r) {
  const double m = r.mu, n = r.nu, t = r.tau;
  return {{
      {1.0, 1.0, 1.0},
      {m / (m + n), 0.5, (m + n) / (m + 2 * n)},
      {m / (m + t), n / (n + t), (m + n) / (m + n + t)},
      {m / (m + n + t), n / (2 * n + t), (m + n) / (m + 2 * n + t)},
  }};
}

Block4x3 u2(const RateQuad& r) {
  const double m = r.mu, s = r.sigma, t = r.tau;
  return {{
      {1.0, 1.0, 1.0},
      {s / (m + s), t / (m + t), (s + t) / (m + s + t)},
      {0.5, t / (s + t), (s + t) / (2 * s + t)},
      {s / (m + 2 * s), t / (m + s + t), (s + t) / (m + 2 * s + t)},
  }};
}

Block3x4 v11(const RateQuad& r) {
  const double m = r.mu, n = r.nu, s = r.sigma, t = r.tau;
  return {{
      {s / (m + s), 0.0, -m * s / ((m + t) * (m + s + t)), 0.0},
      {0.0, s / (n + s), 0.0, -n * s / ((n + t) * (n + s + t))},
      {0.0, -s / (m + n + s), 0.0, s * (m + n) / ((m + n + t) * (m + n + s + t))},
  }};
}

Block3x4 v12(const RateQuad& r) {
  const double m = r.mu, n = r.nu, s = r.sigma, t = r.tau;
  return {{
      {0.0, t / (m + t), 0.0, -m * t / ((m + s) * (m + s + t))},
      {t / (n + t), 0.0, -n * t / ((n + s) * (n + s + t)), 0.0},
      {0.0, -t / (m + n + t), 0.0, t * (m + n) / ((m + n + s) * (m + n + s + t))},
  }};
}

Block3x4 v21(const RateQuad& r) {
  const double m = r.mu, n = r.nu, s = r.sigma, t = r.tau;
  return {{
      {m / (m + s), -m * s / ((n + s) * (m + n + s)), 0.0, 0.0},
      {0.0, 0.0, m / (m + t), -m * t / ((n + t) * (m + n + t))},
      {0.0, 0.0, -m / (m + s + t), m * (s + t) / ((n + s + t) * (m + n + s + t))},
  }};
}

Block3x4 v22(const RateQuad& r) {
  const double m = r.mu, n = r.nu, s = r.sigma, t = r.tau;
  return {{
      {0.0, 0.0, n / (n + s), -n * s / ((m + s) * (m + n + s))},
      {n / (n + t), -n * t / ((m + t) * (m + n + t)), 0.0, 0.0},
      {0.0, 0.0, -n / (n + s + t), n * (s + t) / ((m + s + t) * (m + n + s + t))},
  }};
}

Vec4 q1(const RateQuad& r) {
  const double m = r.mu, n = r.nu, s = r.sigma, t = r.tau;
  return {
      (m * m + m * s + s * s) / (m * s * (m + s)),
      m * s * (m + 2 * n + s) / (n * (m + n) * (n + s) * (m + n + s)),
      m * s * (m + s + 2 * t) / (t * (m + t) * (s + t) * (m + s + t)),
      -m * s * (m + 2 * n + 2 * t + s) / ((n + t) * (m + n + t) * (n + s + t) * (m + n + s + t)),
  };
}

Vec4 q2(const RateQuad& r) {
  const double m = r.mu, n = r.nu, s = r.sigma, t = r.tau;
  return {
      (n * n + n * t + t * t) / (n * t * (n + t)),
      n * t * (2 * m + n + t) / (m * (m + n) * (m + t) * (m + n + t)),
      n * t * (n + 2 * s + t) / (s * (n + s) * (s + t) * (n + s + t)),
      -n * t * (2 * m + n + 2 * s + t) / ((m + s) * (m + n + s) * (m + s + t) * (m + n + s + t)),
  };
}

DenseMatrix build_w(const RateQuad& r) {
  validate(r);
  const auto b11 = product(u1(r), v11(r));
  const auto b12 = product(u1(r), v12(r));
  const auto b21 = product(u2(r), v21(r));
  const auto b22 = product(u2(r), v22(r));
  DenseMatrix w(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      w(i, j) = b11[i][j];
      w(i, j + 4) = b12[i][j];
      w(i + 4, j) = b21[i][j];
      w(i + 4, j + 4) = b22[i][j];
    }
  return w;
}

StationaryWeights solve_omega(const DenseMatrix& w) {
  if (w.rows() != 8 || w.cols() != 8) throw Error(Errc::InvalidArgument, "W must be 8x8");
  DenseMatrix a = DenseMatrix::identity(8) - w;
  for (std::size_t j = 0; j < 8; ++j) a(0, j) = 0.0;
  a(0, 0) = 1.0;
  a(0, 4) = 1.0;
  std::array<double, 8> rhs{};
  rhs[0] = 1.0;
  const auto x = solve_linear(a, rhs);
  StationaryWeights out;
  std::copy(x.begin(), x.end(), out.omega.begin());
  return out;
}

Rate lambda_pure_random(const RateQuad& r) {
  const auto weights = solve_omega(build_w(r));
  const auto a = q1(r);
  const auto b = q2(r);
  double lambda = 0.0;
  for (std::size_t j = 0; j < 4; ++j) lambda += a[j] * weights.omega[j] + b[j] * weights.omega[j + 4];
  return {lambda};
}

}  // namespace mct::spectral
