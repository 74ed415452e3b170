#include "mct/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mct/error.hpp"

namespace mct {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidArgument, what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

Distribution::Distribution(Constant d) : v_(d) { validate(); }
Distribution::Distribution(Exponential d) : v_(d) { validate(); }
Distribution::Distribution(UniformContinuous d) : v_(d) { validate(); }
Distribution::Distribution(Bernoulli d) : v_(d) { validate(); }
Distribution::Distribution(Geometric d) : v_(d) { validate(); }
Distribution::Distribution(DiscreteUniform d) : v_(d) { validate(); }
Distribution::Distribution(TabulatedCdf d) : v_(std::move(d)) { validate(); }

void Distribution::validate() const {
  std::visit(
      Overloaded{
          [](const Constant& d) {
            require(finite(d.value) && d.value >= 0.0, "constant value must be finite and >= 0");
          },
          [](const Exponential& d) {
            require(finite(d.rate) && d.rate > 0.0, "exponential rate must be finite and > 0");
          },
          [](const UniformContinuous& d) {
            require(finite(d.lo) && finite(d.hi) && d.lo < d.hi, "uniform requires lo < hi");
          },
          [](const Bernoulli& d) {
            require(d.p >= 0.0 && d.p <= 1.0, "bernoulli p must lie in [0, 1]");
          },
          [](const Geometric& d) {
            require(d.p >= 0.0 && d.p < 1.0, "geometric p must lie in [0, 1)");
          },
          [](const DiscreteUniform&) {},
          [](const TabulatedCdf& d) {
            require(!d.t.empty() && d.t.size() == d.F.size(),
                    "tabulated_cdf needs equally many breakpoints and values");
            for (std::size_t i = 0; i < d.t.size(); ++i) {
              require(finite(d.t[i]) && finite(d.F[i]), "tabulated_cdf entries must be finite");
              if (i > 0) {
                require(d.t[i] > d.t[i - 1], "tabulated_cdf breakpoints must be ascending");
                require(d.F[i] >= d.F[i - 1], "tabulated_cdf values must be nondecreasing");
              }
            }
            require(d.F.front() >= 0.0, "tabulated_cdf values must start >= 0");
            require(d.F.back() == 1.0, "tabulated_cdf values must end at 1");
          },
      },
      v_);
}

bool operator==(const Distribution& a, const Distribution& b) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if (!b.is<T>()) return false;
        const T& y = b.as<T>();
        if constexpr (std::is_same_v<T, Constant>) return x.value == y.value;
        if constexpr (std::is_same_v<T, Exponential>) return x.rate == y.rate;
        if constexpr (std::is_same_v<T, UniformContinuous>) return x.lo == y.lo && x.hi == y.hi;
        if constexpr (std::is_same_v<T, Bernoulli> || std::is_same_v<T, Geometric>)
          return x.p == y.p;
        if constexpr (std::is_same_v<T, DiscreteUniform>) return x.m == y.m;
        if constexpr (std::is_same_v<T, TabulatedCdf>) return x.t == y.t && x.F == y.F;
        return false;
      },
      a.variant());
}

std::string describe(const Distribution& d) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const Constant& x) { os << "Constant(" << x.value << ")"; },
                 [&](const Exponential& x) { os << "Exponential(rate=" << x.rate << ")"; },
                 [&](const UniformContinuous& x) { os << "Uniform(" << x.lo << ", " << x.hi << ")"; },
                 [&](const Bernoulli& x) { os << "Bernoulli(p=" << x.p << ")"; },
                 [&](const Geometric& x) { os << "Geometric(p=" << x.p << ")"; },
                 [&](const DiscreteUniform& x) { os << "DiscreteUniform(m=" << x.m << ")"; },
                 [&](const TabulatedCdf& x) { os << "TabulatedCdf(" << x.t.size() << " points)"; },
             },
             d.variant());
  return os.str();
}

double draw_from_uniform(const Distribution& d, double u) {
  return std::visit(
      Overloaded{
          [](const Constant& x) { return x.value; },
          [u](const Exponential& x) { return -std::log(u) / x.rate; },
          [u](const UniformContinuous& x) { return x.lo + (x.hi - x.lo) * (1.0 - u); },
          [u](const Bernoulli& x) { return u <= x.p ? 1.0 : 0.0; },
          [u](const Geometric& x) {
            if (x.p == 0.0) return 0.0;
            return std::floor(std::log(u) / std::log(x.p));
          },
          [u](const DiscreteUniform& x) {
            const double k = std::floor((1.0 - u) * (static_cast<double>(x.m) + 1.0));
            return std::min(k, static_cast<double>(x.m));
          },
          [u](const TabulatedCdf& x) {
            const double v = 1.0 - u;
            if (v < x.F.front()) return x.t.front();
            for (std::size_t i = 0; i + 1 < x.t.size(); ++i) {
              if (x.F[i + 1] > v) {
                const double w = (v - x.F[i]) / (x.F[i + 1] - x.F[i]);
                return x.t[i] + w * (x.t[i + 1] - x.t[i]);
              }
            }
            return x.t.back();
          },
      },
      d.variant());
}

double sample(const Distribution& d, RandomStream& stream) {
  if (const auto* c = std::get_if<Constant>(&d.variant())) return c->value;
  return draw_from_uniform(d, stream.uniform_open0());
}

double cdf(const Distribution& d, double t) {
  return std::visit(
      Overloaded{
          [t](const Constant& x) { return t > x.value ? 1.0 : 0.0; },
          [t](const Exponential& x) { return t <= 0.0 ? 0.0 : -std::expm1(-x.rate * t); },
          [t](const UniformContinuous& x) {
            return std::clamp((t - x.lo) / (x.hi - x.lo), 0.0, 1.0);
          },
          [t](const Bernoulli& x) {
            if (t <= 0.0) return 0.0;
            return t <= 1.0 ? 1.0 - x.p : 1.0;
          },
          [t](const Geometric& x) {
            if (t <= 0.0) return 0.0;
            return 1.0 - std::pow(x.p, std::ceil(t));
          },
          [t](const DiscreteUniform& x) {
            if (t <= 0.0) return 0.0;
            const double n = static_cast<double>(x.m) + 1.0;
            return std::min(n, std::ceil(t)) / n;
          },
          [t](const TabulatedCdf& x) {
            if (t <= x.t.front()) return 0.0;
            if (t > x.t.back()) return 1.0;
            const auto it = std::lower_bound(x.t.begin(), x.t.end(), t);
            const std::size_t i = static_cast<std::size_t>(it - x.t.begin());
            const double w = (t - x.t[i - 1]) / (x.t[i] - x.t[i - 1]);
            return x.F[i - 1] + w * (x.F[i] - x.F[i - 1]);
          },
      },
      d.variant());
}

double mean(const Distribution& d) {
  return std::visit(
      Overloaded{
          [](const Constant& x) { return x.value; },
          [](const Exponential& x) { return 1.0 / x.rate; },
          [](const UniformContinuous& x) { return 0.5 * (x.lo + x.hi); },
          [](const Bernoulli& x) { return x.p; },
          [](const Geometric& x) { return x.p / (1.0 - x.p); },
          [](const DiscreteUniform& x) { return 0.5 * static_cast<double>(x.m); },
          [](const TabulatedCdf& x) {
            double m = x.t.front() * x.F.front();
            for (std::size_t i = 0; i + 1 < x.t.size(); ++i)
              m += (x.F[i + 1] - x.F[i]) * 0.5 * (x.t[i] + x.t[i + 1]);
            return m;
          },
      },
      d.variant());
}

std::vector<double> breakpoints(const Distribution& d, double lo, double hi) {
  std::vector<double> pts;
  auto add = [&](double x) {
    if (x > lo && x < hi) pts.push_back(x);
  };
  std::visit(Overloaded{
                 [&](const Constant& x) { add(x.value); },
                 [&](const Exponential&) { add(0.0); },
                 [&](const UniformContinuous& x) {
                   add(x.lo);
                   add(x.hi);
                 },
                 [&](const Bernoulli&) {
                   add(0.0);
                   add(1.0);
                 },
                 [&](const Geometric&) {
                   for (double k = std::max(0.0, std::ceil(lo)); k < hi; k += 1.0) add(k);
                 },
                 [&](const DiscreteUniform& x) {
                   for (std::uint32_t k = 0; k <= x.m; ++k) add(static_cast<double>(k));
                 },
                 [&](const TabulatedCdf& x) {
                   for (double v : x.t) add(v);
                 },
             },
             d.variant());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double support_min(const Distribution& d) {
  return std::visit(Overloaded{
                        [](const Constant& x) { return x.value; },
                        [](const Exponential&) { return 0.0; },
                        [](const UniformContinuous& x) { return x.lo; },
                        [](const Bernoulli& x) { return x.p == 1.0 ? 1.0 : 0.0; },
                        [](const Geometric&) { return 0.0; },
                        [](const DiscreteUniform&) { return 0.0; },
                        [](const TabulatedCdf& x) { return x.t.front(); },
                    },
                    d.variant());
}

std::vector<std::pair<double, double>> discrete_pmf(const Distribution& d, double tail_mass) {
  std::vector<std::pair<double, double>> pmf;
  std::visit(Overloaded{
                 [&](const Constant& x) { pmf.emplace_back(x.value, 1.0); },
                 [&](const Bernoulli& x) {
                   if (x.p < 1.0) pmf.emplace_back(0.0, 1.0 - x.p);
                   if (x.p > 0.0) pmf.emplace_back(1.0, x.p);
                 },
                 [&](const DiscreteUniform& x) {
                   const double w = 1.0 / (static_cast<double>(x.m) + 1.0);
                   for (std::uint32_t k = 0; k <= x.m; ++k)
                     pmf.emplace_back(static_cast<double>(k), w);
                 },
                 [&](const Geometric& x) {
                   if (x.p == 0.0) {
                     pmf.emplace_back(0.0, 1.0);
                     return;
                   }
                   // Atoms 0..K with tail p^(K+1) <= tail_mass folded into K.
                   double pk = 1.0;
                   for (std::uint64_t k = 0;; ++k) {
                     pmf.emplace_back(static_cast<double>(k), (1.0 - x.p) * pk);
                     pk *= x.p;
                     if (pk <= tail_mass) {
                       pmf.back().second += pk;
                       break;
                     }
                   }
                 },
                 [](const auto&) {},
             },
             d.variant());
  return pmf;
}

bool has_finite_support(const Distribution& d) {
  return d.is<Constant>() || d.is<Bernoulli>() || d.is<DiscreteUniform>();
}

}  // namespace mct
