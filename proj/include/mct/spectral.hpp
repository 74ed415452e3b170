#pragma once

#include <array>

#include "mct/analytic.hpp"
#include "mct/numerics.hpp"

namespace mct::spectral {

/// Rates of alpha, beta, gamma, delta; all exponential.
struct RateQuad {
  double mu;
  double nu;
  double sigma;
  double tau;
};

using Block4x3 = std::array<std::array<double, 3>, 4>;
using Block3x4 = std::array<std::array<double, 4>, 3>;
using Vec4 = std::array<double, 4>;

Block4x3 u1(const RateQuad& r);
Block4x3 u2(const RateQuad& r);
Block3x4 v11(const RateQuad& r);
Block3x4 v12(const RateQuad& r);
Block3x4 v21(const RateQuad& r);
Block3x4 v22(const RateQuad& r);
Vec4 q1(const RateQuad& r);
Vec4 q2(const RateQuad& r);

/// 8x8 matrix [[U1 V11, U1 V12], [U2 V21, U2 V22]].
DenseMatrix build_w(const RateQuad& r);

/// omega = (omega_10..omega_13, omega_20..omega_23).
struct StationaryWeights {
  std::array<double, 8> omega{};
};

/// Solves (I - W) omega = 0 with the first row replaced by omega_10 + omega_20 = 1.
StationaryWeights solve_omega(const DenseMatrix& w);

Rate lambda_pure_random(const RateQuad& r);

}  // namespace mct::spectral
