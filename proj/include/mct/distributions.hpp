#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mct/random.hpp"

namespace mct {

struct Constant {
  double value;
};
struct Exponential {
  double rate;
};
struct UniformContinuous {
  double lo;
  double hi;
};
struct Bernoulli {
  double p;
};
/// Support {0, 1, 2, ...} with P{X = k} = (1 - p) p^k.
struct Geometric {
  double p;
};
/// Support {0, 1, ..., m}, equally likely.
struct DiscreteUniform {
  std::uint32_t m;
};
/// Piecewise-linear distribution function through (t[i], F[i]); an atom of
/// mass F[0] sits at t[0] when F[0] > 0.
struct TabulatedCdf {
  std::vector<double> t;
  std::vector<double> F;
};

/// Law of one matrix entry. Construction validates the parameters.
class Distribution {
 public:
  using Variant = std::variant<Constant, Exponential, UniformContinuous, Bernoulli, Geometric,
                               DiscreteUniform, TabulatedCdf>;

  Distribution(Constant d);           // NOLINT
  Distribution(Exponential d);        // NOLINT
  Distribution(UniformContinuous d);  // NOLINT
  Distribution(Bernoulli d);          // NOLINT
  Distribution(Geometric d);          // NOLINT
  Distribution(DiscreteUniform d);    // NOLINT
  Distribution(TabulatedCdf d);       // NOLINT

  const Variant& variant() const { return v_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  bool is_constant() const { return is<Constant>(); }
  bool is_constant(double c) const { return is<Constant>() && as<Constant>().value == c; }
  bool is_exponential() const { return is<Exponential>(); }

  friend bool operator==(const Distribution& a, const Distribution& b);

 private:
  void validate() const;
  Variant v_;
};

std::string describe(const Distribution& d);

/// One draw from d.
double sample(const Distribution& d, RandomStream& stream);

/// Inverse-transform map from u in (0, 1] to a draw from d; sample() is
/// draw_from_uniform(d, stream.uniform_open0()). Exponential uses -ln(u)/rate.
double draw_from_uniform(const Distribution& d, double u);

/// P{X < t}: left-continuous at atoms.
double cdf(const Distribution& d, double t);

double mean(const Distribution& d);

/// Points in the open interval (lo, hi) where cdf is discontinuous or not
/// differentiable, ascending.
std::vector<double> breakpoints(const Distribution& d, double lo, double hi);

/// Smallest point of the support.
double support_min(const Distribution& d);

/// Probability mass function as ascending (value, mass) pairs for laws with
/// finite support (Constant, Bernoulli, DiscreteUniform), or Geometric truncated
/// at the 1 - tail_mass quantile with the remaining tail lumped onto the last
/// atom. Empty for continuous laws.
std::vector<std::pair<double, double>> discrete_pmf(const Distribution& d,
                                                    double tail_mass = 1e-12);

bool has_finite_support(const Distribution& d);

}  // namespace mct
