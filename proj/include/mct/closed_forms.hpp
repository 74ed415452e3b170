#pragma once

// Rational-function closed forms for the mean cycle time. Templated on the
// scalar so the same expressions evaluate in double or in exact rationals.

#include <array>
#include <cstddef>

namespace mct::closed_forms {

/// sum_i c[i] x^(N-1-i) y^i, evaluated Horner-style in x.
template <class T, std::size_t N>
T homogeneous(const std::array<long, N>& c, const T& x, const T& y) {
  T result = T(0);
  T ypow = T(1);
  for (std::size_t i = 0; i < N; ++i) {
    result = result * x + T(c[i]) * ypow;
    ypow = ypow * y;
  }
  return result;
}

/// sum_i c[i] p^i
template <class T, std::size_t N>
T polynomial(const std::array<long, N>& c, const T& p) {
  T result = T(0);
  for (std::size_t i = N; i-- > 0;) result = result * p + T(c[i]);
  return result;
}

/// All four entries exponential with rate mu.
template <class T>
T iid_exponential(const T& mu) {
  return T(407) / (T(228) * mu);
}

/// Diagonal entries exponential(mu), off-diagonal exponential(nu).
template <class T>
T diag_offdiag_exponential(const T& mu, const T& nu) {
  static constexpr std::array<long, 11> p = {160,   1776,  8220, 21378, 35595, 41566,
                                             35595, 21378, 8220, 1776,  160};
  static constexpr std::array<long, 9> q = {8, 80, 321, 690, 880, 690, 321, 80, 8};
  return homogeneous(p, mu, nu) / (T(16) * mu * nu * (mu + nu) * homogeneous(q, mu, nu));
}

/// i.i.d. Bernoulli(p) entries. The sign inside the denominator is
/// 1 + 2p(1-p)(1-3p+p^2); this reproduces 6/7 at p = 1/2 and the exact
/// difference-chain value for every p.
template <class T>
T iid_bernoulli(const T& p) {
  const T q = T(1) - p;
  const T q4 = q * q * q * q;
  return T(1) - (T(1) + T(2) * p) * q4 / (T(1) + T(2) * p * q * (T(1) - T(3) * p + p * p));
}

/// i.i.d. geometric entries, P{X = k} = (1 - p) p^k.
template <class T>
T iid_geometric(const T& p) {
  static constexpr std::array<long, 14> n = {4,   18,  50,  99, 175, 244, 289,
                                             273, 218, 137, 77, 32,  11,  1};
  static constexpr std::array<long, 11> d = {1, 6, 8, 20, 25, 32, 25, 20, 8, 6, 1};
  const T num = p * polynomial(n, p);
  const T den = (T(1) - p) * (T(1) + p) * (T(1) + p + p * p) * polynomial(d, p);
  return num / den;
}

/// [[alpha, 0], [0, delta]], rates mu and tau.
template <class T>
T zero_offdiag(const T& mu, const T& tau) {
  static constexpr std::array<long, 5> n = {1, 1, 1, 1, 1};
  return homogeneous(n, mu, tau) / (mu * tau * (mu + tau) * (mu * mu + tau * tau));
}

/// [[0, beta], [gamma, 0]], rates nu and sigma.
template <class T>
T zero_diag(const T& nu, const T& sigma) {
  return (T(4) * nu * nu + T(7) * nu * sigma + T(4) * sigma * sigma) /
         (T(6) * nu * sigma * (nu + sigma));
}

/// [[alpha, beta], [0, 0]], rates mu and nu.
template <class T>
T zero_row(const T& mu, const T& nu) {
  static constexpr std::array<long, 5> n = {2, 7, 10, 11, 4};
  return homogeneous(n, mu, nu) / (mu * nu * (mu + nu) * (mu + nu) * (T(3) * mu + T(4) * nu));
}

/// [[alpha, beta], [gamma, 0]] with sigma = mu.
template <class T>
T one_zero_diag_sigma_eq_mu(const T& mu, const T& nu) {
  static constexpr std::array<long, 6> n = {48, 238, 495, 581, 326, 68};
  static constexpr std::array<long, 5> d = {36, 147, 215, 130, 28};
  return homogeneous(n, mu, nu) / (T(2) * mu * nu * homogeneous(d, mu, nu));
}

/// [[alpha, beta], [gamma, 0]] with sigma = nu.
template <class T>
T one_zero_diag_sigma_eq_nu(const T& mu, const T& nu) {
  static constexpr std::array<long, 9> n = {15, 152, 624, 1382, 1838, 1592, 973, 384, 64};
  static constexpr std::array<long, 6> d = {12, 97, 286, 397, 256, 64};
  return homogeneous(n, mu, nu) / (mu * nu * (mu + nu) * (mu + nu) * homogeneous(d, mu, nu));
}

/// [[alpha, beta], [0, delta]] with nu = mu; second argument is tau.
template <class T>
T one_zero_offdiag_nu_eq_mu(const T& mu, const T& tau) {
  static constexpr std::array<long, 9> n = {288, 1048, 1936, 2688, 3012, 2226, 941, 204, 17};
  static constexpr std::array<long, 8> d = {144, 524, 968, 1200, 910, 387, 84, 7};
  return homogeneous(n, mu, tau) / (T(2) * mu * tau * homogeneous(d, mu, tau));
}

/// [[alpha, beta], [0, delta]] with tau = mu; second argument is nu.
template <class T>
T one_zero_offdiag_tau_eq_mu(const T& mu, const T& nu) {
  static constexpr std::array<long, 11> n = {256,   2112,  8044,  19355, 32167, 36887,
                                             28709, 14854, 4912,  944,   80};
  static constexpr std::array<long, 9> d = {192, 1344, 4047, 6770, 6799, 4216, 1600, 344, 32};
  return homogeneous(n, mu, nu) / (T(2) * mu * nu * (mu + nu) * homogeneous(d, mu, nu));
}

}  // namespace mct::closed_forms
