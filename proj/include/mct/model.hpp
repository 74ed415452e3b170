#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mct/distributions.hpp"

namespace mct {

/// Laws of the four entries of A(k) = [[alpha, beta], [gamma, delta]]. The
/// entry sequences are mutually independent and i.i.d. over k.
struct MatrixModel {
  Distribution a11;
  Distribution a12;
  Distribution a21;
  Distribution a22;

  friend bool operator==(const MatrixModel&, const MatrixModel&) = default;
};

/// The four elements of the group generated by transposition and the
/// simultaneous row/column swap.
enum class Symmetry { Identity, Transpose, Swap, TransposeSwap };

inline constexpr std::array<Symmetry, 4> kSymmetries = {Symmetry::Identity, Symmetry::Transpose,
                                                        Symmetry::Swap, Symmetry::TransposeSwap};

std::string_view to_string(Symmetry g);

/// transpose: [[a,b],[c,d]] -> [[a,c],[b,d]]
/// swap:      [[a,b],[c,d]] -> [[d,c],[b,a]]
/// both:      [[a,b],[c,d]] -> [[d,b],[c,a]]
MatrixModel transform_apply(const MatrixModel& m, Symmetry g);

/// Composition: transform_apply(transform_apply(m, g), h) == transform_apply(m, compose(h, g)).
Symmetry compose(Symmetry outer, Symmetry inner);

enum class Family {
  IidExponential,
  IidUniform01,
  IidBernoulli,
  IidGeometric,
  IidDiscreteUniform,
  DiagOffdiagExponential,
  PureExponential,
  ZeroOffdiag,
  ZeroDiag,
  ZeroRow,
  OneZeroDiag_SigmaEqMu,
  OneZeroDiag_SigmaEqNu,
  OneZeroOffdiag_NuEqMu,
  OneZeroOffdiag_TauEqMu,
  ConstDiagOneRandom,
  ZeroRowConstDiag,
  ZeroRowGeneral,
  ThreeConstSymmetric,
  DiscreteFiniteSupport,
  NoClosedForm,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Result of matching a model onto a solvable family.
struct AnalyticCase {
  Family family = Family::NoClosedForm;
  /// Named parameters of the family (mu, nu, sigma, tau, c, p, m, hi).
  std::map<std::string, double> params;
  /// Law of the single random entry for ZeroRowGeneral.
  std::optional<Distribution> law;
  /// Symmetry that maps the input onto `matched`.
  Symmetry transform = Symmetry::Identity;
  /// The orbit member that matched the family pattern.
  std::optional<MatrixModel> matched;

  double param(const std::string& name) const { return params.at(name); }
};

/// Searches the symmetry orbit of m, family by family in priority order.
AnalyticCase classify(const MatrixModel& m);

/// Matches m itself (no orbit search) against one family.
std::optional<AnalyticCase> match_family(const MatrixModel& m, Family f);

/// Families in the order classify() tries them.
const std::array<Family, 19>& family_priority();

}  // namespace mct
