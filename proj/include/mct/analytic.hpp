#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mct/distributions.hpp"

namespace mct {

/// Mean cycle time (time per cycle).
struct Rate {
  double lambda = 0.0;
  /// Set for values known only to the three decimals they were published with.
  bool low_precision = false;
};

enum class IidKind { Exponential, Uniform01, Bernoulli, Geometric, DiscreteUniform };

/// i.i.d. entries. `param` is the rate (Exponential), the upper end h of
/// U[0, h] (Uniform01), p (Bernoulli, Geometric) or m (DiscreteUniform).
/// Uniform and DiscreteUniform m = 2 return published 3-decimal constants,
/// flagged low_precision; other m delegate to the difference chain.
Rate lambda_iid(IidKind kind, double param);

Rate lambda_diag_offdiag_exp(double mu, double nu);

enum class ZeroPattern { ZeroOffdiag, ZeroDiag, ZeroRow, ZeroColumn };

/// ZeroOffdiag(mu, tau), ZeroDiag(nu, sigma), ZeroRow(mu, nu), ZeroColumn(mu, sigma).
Rate lambda_zero_pattern_exp(ZeroPattern pattern, double p1, double p2);

enum class OneZeroCase { OneZeroDiag_SigmaEqMu, OneZeroDiag_SigmaEqNu, OneZeroOffdiag_NuEqMu,
                         OneZeroOffdiag_TauEqMu };

/// `other` is nu for SigmaEqMu / SigmaEqNu / TauEqMu and tau for NuEqMu.
Rate lambda_one_zero_entry_exp(OneZeroCase which, double mu, double other);

/// [[alpha, 0], [0, c]], alpha ~ Exp(mu).
Rate lambda_const_diag_one_random(double mu, double c);

/// [[c, beta], [0, 0]], beta ~ Exp(nu); the column twin [[c, 0], [gamma, 0]] is identical.
Rate lambda_zero_row_const_diag(double nu, double c);

/// [[alpha, c], [0, 0]] for an arbitrary nonnegative law F of alpha, by quadrature.
/// Throws Error(RatioDegenerate) when F(t) F(c - t) reaches 1 on (0, c).
Rate lambda_zero_row_general(const Distribution& law, double c);

/// [[alpha, c], [0, 0]], alpha ~ Exp(mu), closed form.
Rate lambda_zero_row_exp_const(double mu, double c);

/// [[alpha, c], [c, c]], alpha ~ Exp(mu).
Rate lambda_three_const_symmetric(double mu, double c);

struct FixedPointState {
  double a = 0.0;
  double b = 0.0;
  std::uint64_t iterations = 0;
};

/// Iterates the linear recurrence for the integral functionals (a_k, b_k) of
/// the [[alpha, 0], [0, c]] system from (0, 0) until the change drops below tol.
FixedPointState fixed_point_ab(double mu, double c, double tol);

/// Closed-form limit of fixed_point_ab.
FixedPointState fixed_point_ab_limit(double mu, double c);

struct Atom {
  double location = 0.0;
  double probability = 0.0;
};

/// Limiting law of the per-cycle increment X(k) = x(k) - x(k-1).
struct IncrementDistribution {
  /// P{X < t}.
  std::function<double(double)> cdf;
  std::optional<Atom> atom;
  double mean = 0.0;
};

/// [[alpha, 0], [0, c]], alpha ~ Exp(mu). The mean is computed as
/// c p + integral of t dPhi over the absolutely continuous part.
IncrementDistribution increment_distribution_const_diag(double mu, double c);

/// [[alpha, c], [0, 0]], alpha ~ F. The mean is computed from the survival
/// function of the limiting law.
IncrementDistribution increment_distribution_zero_row(const Distribution& law, double c);

/// Phi_k(t) of the zero-row recursion X(k) = max(alpha_k, c - X(k-1)), X(0) = 0,
/// evaluated by direct iteration of the recursive equation.
double zero_row_phi_k(const Distribution& law, double c, unsigned k, double t);

/// G(t) = F(t) F(c - t).
double zero_row_ratio(const Distribution& law, double c, double t);

inline constexpr double kRatioDegenerateThreshold = 1.0 - 1e-12;

}  // namespace mct
