#pragma once

#include <cstddef>
#include <vector>

#include "mct/analytic.hpp"
#include "mct/model.hpp"
#include "mct/numerics.hpp"

namespace mct::chain {

/// Markov chain of the state difference Y(k) = y(k) - x(k) for a model with
/// finite-support entries.
struct DifferenceChain {
  /// Reachable values of Y from Y(0) = 0, ascending.
  std::vector<double> support;
  /// Row-stochastic, indexed like support.
  DenseMatrix transition;
  /// E[max(alpha, y + beta)] for each y in support.
  std::vector<double> increment_mean;
};

inline constexpr std::size_t kMaxStates = 100000;

/// Throws Error(InvalidModel) for entries without finite support and
/// Error(SupportExplosion) above max_states reachable states.
DifferenceChain build_chain(const MatrixModel& m, std::size_t max_states = kMaxStates);

/// Stationary law on the unique closed class (zero on transient states).
/// Throws Error(SingularMatrix) when the chain has several closed classes.
std::vector<double> stationary(const DifferenceChain& ch);

Rate lambda_discrete(const MatrixModel& m);

}  // namespace mct::chain
