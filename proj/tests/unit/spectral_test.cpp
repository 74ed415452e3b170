#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "mct/analytic.hpp"
#include "mct/error.hpp"
#include "mct/spectral.hpp"

using namespace mct;
using namespace mct::spectral;
using Catch::Approx;

namespace {

// Second, independent keying of the printed blocks. Written column-major per
// block so a copy-paste from the library would not line up.
struct Keyed {
  double u1[4][3], u2[4][3], v11[3][4], v12[3][4], v21[3][4], v22[3][4], q1[4], q2[4];
};

Keyed keyed(double m, double n, double s, double t) {
  Keyed k{};
  // U1 columns
  const double u1c0[4] = {1, m / (m + n), m / (m + t), m / (m + n + t)};
  const double u1c1[4] = {1, 0.5, n / (n + t), n / (2 * n + t)};
  const double u1c2[4] = {1, (m + n) / (m + 2 * n), (m + n) / (m + n + t), (m + n) / (m + 2 * n + t)};
  // U2 columns
  const double u2c0[4] = {1, s / (m + s), 0.5, s / (m + 2 * s)};
  const double u2c1[4] = {1, t / (m + t), t / (s + t), t / (m + s + t)};
  const double u2c2[4] = {1, (s + t) / (m + s + t), (s + t) / (2 * s + t), (s + t) / (m + 2 * s + t)};
  for (int i = 0; i < 4; ++i) {
    k.u1[i][0] = u1c0[i];
    k.u1[i][1] = u1c1[i];
    k.u1[i][2] = u1c2[i];
    k.u2[i][0] = u2c0[i];
    k.u2[i][1] = u2c1[i];
    k.u2[i][2] = u2c2[i];
  }
  const double v11[3][4] = {
      {s / (m + s), 0, -m * s / ((m + t) * (m + s + t)), 0},
      {0, s / (n + s), 0, -n * s / ((n + t) * (n + s + t))},
      {0, -s / (m + n + s), 0, s * (m + n) / ((m + n + t) * (m + n + s + t))}};
  const double v12[3][4] = {
      {0, t / (m + t), 0, -m * t / ((m + s) * (m + s + t))},
      {t / (n + t), 0, -n * t / ((n + s) * (n + s + t)), 0},
      {0, -t / (m + n + t), 0, t * (m + n) / ((m + n + s) * (m + n + s + t))}};
  const double v21[3][4] = {
      {m / (m + s), -m * s / ((n + s) * (m + n + s)), 0, 0},
      {0, 0, m / (m + t), -m * t / ((n + t) * (m + n + t))},
      {0, 0, -m / (m + s + t), m * (s + t) / ((n + s + t) * (m + n + s + t))}};
  const double v22[3][4] = {
      {0, 0, n / (n + s), -n * s / ((m + s) * (m + n + s))},
      {n / (n + t), -n * t / ((m + t) * (m + n + t)), 0, 0},
      {0, 0, -n / (n + s + t), n * (s + t) / ((m + s + t) * (m + n + s + t))}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      k.v11[i][j] = v11[i][j];
      k.v12[i][j] = v12[i][j];
      k.v21[i][j] = v21[i][j];
      k.v22[i][j] = v22[i][j];
    }
  }
  const double q1[4] = {
      (m * m + m * s + s * s) / (m * s * (m + s)),
      m * s * (m + 2 * n + s) / (n * (m + n) * (n + s) * (m + n + s)),
      m * s * (m + s + 2 * t) / (t * (m + t) * (s + t) * (m + s + t)),
      -m * s * (m + 2 * n + 2 * t + s) / ((n + t) * (m + n + t) * (n + s + t) * (m + n + s + t))};
  const double q2[4] = {
      (n * n + n * t + t * t) / (n * t * (n + t)),
      n * t * (2 * m + n + t) / (m * (m + n) * (m + t) * (m + n + t)),
      n * t * (n + 2 * s + t) / (s * (n + s) * (s + t) * (n + s + t)),
      -n * t * (2 * m + n + 2 * s + t) / ((m + s) * (m + n + s) * (m + s + t) * (m + n + s + t))};
  for (int i = 0; i < 4; ++i) {
    k.q1[i] = q1[i];
    k.q2[i] = q2[i];
  }
  return k;
}

template <std::size_t R, std::size_t C>
void check_block(const std::array<std::array<double, C>, R>& got, const double (&want)[R][C],
                 const char* name) {
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) {
      INFO(name << "(" << i << "," << j << ")");
      CHECK(got[i][j] == Approx(want[i][j]).epsilon(1e-14).margin(1e-300));
    }
  }
}

double lam(double m, double n, double s, double t) { return lambda_pure_random({m, n, s, t}).lambda; }

}  // namespace

TEST_CASE("printed blocks: double-entry transcription check", "[spectral]") {
  for (const RateQuad r : {RateQuad{0.37, 1.9, 2.6, 0.81}, RateQuad{5.3, 0.44, 1.13, 3.7}}) {
    const auto k = keyed(r.mu, r.nu, r.sigma, r.tau);
    check_block(u1(r), k.u1, "U1");
    check_block(u2(r), k.u2, "U2");
    check_block(v11(r), k.v11, "V11");
    check_block(v12(r), k.v12, "V12");
    check_block(v21(r), k.v21, "V21");
    check_block(v22(r), k.v22, "V22");
    for (int i = 0; i < 4; ++i) {
      CHECK(q1(r)[i] == Approx(k.q1[i]).epsilon(1e-14));
      CHECK(q2(r)[i] == Approx(k.q2[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("build_w", "[spectral]") {
  CHECK(u1({1, 1, 2, 3})[1][0] == 0.5);
  for (double x : {0.1, 1.0, 7.0}) {
    const auto b = u1({x, 2 * x, 3, x});
    CHECK(b[0] == std::array<double, 3>{1, 1, 1});
  }
  // Oracle values at (1, 2, 3, 4).
  const auto w = build_w({1, 2, 3, 4});
  const double row0[8] = {0.75, 0.1, -0.075, 0.01746031746031746,
                          0.66666666666666667, 0.22857142857142857, -0.17777777777777778, 0.075};
  const double row5[8] = {0.1875, -0.075, 0.050625, -0.0081349206349206349,
                          0.26666666666666667, -0.18285714285714286, 0.10555555555555556, -0.034375};
  for (int j = 0; j < 8; ++j) {
    CHECK(w(0, j) == Approx(row0[j]).epsilon(1e-13));
    CHECK(w(5, j) == Approx(row5[j]).epsilon(1e-13));
  }
  CHECK_THROWS_AS(build_w({1, 0, 1, 1}), Error);
  CHECK_THROWS_AS(build_w({1, 1, -1, 1}), Error);
}

TEST_CASE("W is covariant under the simultaneous permutation", "[spectral][property]") {
  // Swapping the two rows/columns maps (mu, nu, sigma, tau) to (tau, sigma, nu, mu); omega_1 and
  // omega_2 trade places and the two middle components inside each block swap.
  const std::size_t inner[4] = {0, 2, 1, 3};
  auto perm = [&](std::size_t i) { return (i < 4 ? 4 : 0) + inner[i % 4]; };
  for (const RateQuad r : {RateQuad{1, 2, 3, 4}, RateQuad{0.3, 1.7, 0.9, 2.2}}) {
    const auto w = build_w(r);
    const auto ws = build_w({r.tau, r.sigma, r.nu, r.mu});
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(ws(perm(i), perm(j)) == Approx(w(i, j)).margin(1e-13));
  }
}

TEST_CASE("solve_omega", "[spectral]") {
  const auto w = build_w({1, 2, 3, 4});
  const auto om = solve_omega(w).omega;
  CHECK(om[0] + om[4] == Approx(1.0).epsilon(1e-15));
  const auto resid = (DenseMatrix::identity(8) - w) * std::span<const double>(om);
  for (double v : resid) CHECK(std::abs(v) <= 1e-9);
  const double want[8] = {0.77314470199681972, 0.25197132614070344, 0.14712736194843587,
                          0.10312354669477956, 0.22685529800318028, 0.17062738703665212,
                          0.11372320720538038, 0.097374310443275949};
  for (int i = 0; i < 8; ++i) CHECK(om[i] == Approx(want[i]).epsilon(1e-12));

  for (double mu : {0.5, 1.0, 3.0}) {
    const auto e = solve_omega(build_w({mu, mu, mu, mu})).omega;
    for (int j = 0; j < 4; ++j) CHECK(e[j] == Approx(e[4 + j]).epsilon(1e-12));
  }
}

TEST_CASE("lambda_pure_random against other methods", "[spectral]") {
  CHECK(lam(1, 1, 1, 1) == Approx(407.0 / 228).epsilon(1e-13));
  CHECK(lam(1, 2, 2, 1) == Approx(1.4122895933161322).epsilon(1e-13));
  CHECK(lam(1, 2, 3, 4) == Approx(1.1167955701668941).epsilon(1e-13));
  CHECK(lam(0.5, 1.5, 2.5, 0.7) == Approx(2.3200223715052243).epsilon(1e-13));
  CHECK(lam(3, 0.25, 1, 2) == Approx(3.2776901818803253).epsilon(1e-13));
  for (double mu : {0.2, 0.7, 1.0, 2.3, 5.0}) {
    CHECK(std::abs(lam(mu, mu, mu, mu) - 407.0 / (228 * mu)) <= 1e-10 * (1 + 1 / mu));
    for (double nu : {0.2, 0.7, 1.0, 2.3, 5.0})
      CHECK(std::abs(lam(mu, nu, nu, mu) - lambda_diag_offdiag_exp(mu, nu).lambda) <= 1e-10);
  }
  for (const auto& r : {RateQuad{1, 3, 2, 4}, RateQuad{4, 3, 2, 1}, RateQuad{4, 2, 3, 1}})
    CHECK(std::abs(lambda_pure_random(r).lambda - lam(1, 2, 3, 4)) <= 1e-10);
}

TEST_CASE("zero-entry formulas are limits of the spectral solution", "[spectral]") {
  // A rate of 1e7 stands in for a zero entry; the error is O(1e-7).
  constexpr double z = 1e7;
  constexpr double rel = 1e-6;
  using O = OneZeroCase;
  using P = ZeroPattern;
  for (const auto& [a, b] : {std::pair{1.3, 0.7}, std::pair{0.5, 2.0}, std::pair{1.0, 1.0}}) {
    CHECK(lam(a, z, z, b) == Approx(lambda_zero_pattern_exp(P::ZeroOffdiag, a, b).lambda).epsilon(rel));
    CHECK(lam(z, a, b, z) == Approx(lambda_zero_pattern_exp(P::ZeroDiag, a, b).lambda).epsilon(rel));
    CHECK(lam(a, b, z, z) == Approx(lambda_zero_pattern_exp(P::ZeroRow, a, b).lambda).epsilon(rel));
    CHECK(lam(a, z, b, z) == Approx(lambda_zero_pattern_exp(P::ZeroColumn, a, b).lambda).epsilon(rel));
    CHECK(lam(a, b, a, z) == Approx(lambda_one_zero_entry_exp(O::OneZeroDiag_SigmaEqMu, a, b).lambda).epsilon(rel));
    CHECK(lam(a, b, b, z) == Approx(lambda_one_zero_entry_exp(O::OneZeroDiag_SigmaEqNu, a, b).lambda).epsilon(rel));
    CHECK(lam(a, a, z, b) == Approx(lambda_one_zero_entry_exp(O::OneZeroOffdiag_NuEqMu, a, b).lambda).epsilon(rel));
    CHECK(lam(a, b, z, a) == Approx(lambda_one_zero_entry_exp(O::OneZeroOffdiag_TauEqMu, a, b).lambda).epsilon(rel));
  }
}

TEST_CASE("spectral invariances on random quads", "[spectral][property]") {
  std::mt19937_64 gen(2718);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double m = std::exp(u(gen)), n = std::exp(u(gen)), s = std::exp(u(gen)), t = std::exp(u(gen));
    const double base = lam(m, n, s, t);
    CHECK(std::abs(lam(m, s, n, t) - base) <= 1e-10 * base);
    CHECK(std::abs(lam(t, s, n, m) - base) <= 1e-10 * base);
    CHECK(std::abs(lam(t, n, s, m) - base) <= 1e-10 * base);
    const double c = std::exp(u(gen));
    CHECK(std::abs(lam(c * m, c * n, c * s, c * t) - base / c) <= 1e-10 * base / c);
    CHECK(base >= std::max(1 / m, 1 / t));
    const auto w = build_w({m, n, s, t});
    const auto om = solve_omega(w).omega;
    const auto resid = (DenseMatrix::identity(8) - w) * std::span<const double>(om);
    for (double v : resid) CHECK(std::abs(v) <= 1e-9);
  }
}
