#include "mct/solve.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "mct/chain.hpp"
#include "mct/closed_forms.hpp"
#include "mct/spectral.hpp"

namespace mct {

namespace {

using boost::multiprecision::cpp_rational;
namespace cf = closed_forms;

Solution closed(const Rate& r, std::string method = "closed form") {
  return {r.lambda, std::move(method), r.low_precision, std::nullopt};
}

std::optional<std::string> format_rational(const cpp_rational& v) {
  constexpr std::size_t kMaxDigits = 12;
  const auto num = boost::multiprecision::numerator(v).str();
  const auto den = boost::multiprecision::denominator(v).str();
  if (num.size() > kMaxDigits + 1 || den.size() > kMaxDigits) return std::nullopt;
  if (den == "1") return num;
  return num + "/" + den;
}

}  // namespace

std::optional<std::string> exact_rational(const AnalyticCase& c) {
  auto p = [&](const char* name) { return cpp_rational(c.param(name)); };
  switch (c.family) {
    case Family::IidExponential: return format_rational(cf::iid_exponential(p("mu")));
    case Family::IidBernoulli: return format_rational(cf::iid_bernoulli(p("p")));
    case Family::IidGeometric: return format_rational(cf::iid_geometric(p("p")));
    case Family::IidDiscreteUniform:
      if (c.param("m") == 1.0) return "6/7";
      if (c.param("m") == 0.0) return "0";
      return std::nullopt;
    case Family::DiagOffdiagExponential:
      return format_rational(cf::diag_offdiag_exponential(p("mu"), p("nu")));
    case Family::ZeroOffdiag: return format_rational(cf::zero_offdiag(p("mu"), p("tau")));
    case Family::ZeroDiag: return format_rational(cf::zero_diag(p("nu"), p("sigma")));
    case Family::ZeroRow: return format_rational(cf::zero_row(p("mu"), p("nu")));
    case Family::OneZeroDiag_SigmaEqMu:
      return format_rational(cf::one_zero_diag_sigma_eq_mu(p("mu"), p("nu")));
    case Family::OneZeroDiag_SigmaEqNu:
      return format_rational(cf::one_zero_diag_sigma_eq_nu(p("mu"), p("nu")));
    case Family::OneZeroOffdiag_NuEqMu:
      return format_rational(cf::one_zero_offdiag_nu_eq_mu(p("mu"), p("tau")));
    case Family::OneZeroOffdiag_TauEqMu:
      return format_rational(cf::one_zero_offdiag_tau_eq_mu(p("mu"), p("nu")));
    default: return std::nullopt;
  }
}

std::optional<Solution> solve(const AnalyticCase& c) {
  auto p = [&](const char* name) { return c.param(name); };
  std::optional<Solution> out;
  switch (c.family) {
    case Family::IidExponential: out = closed(lambda_iid(IidKind::Exponential, p("mu"))); break;
    case Family::IidUniform01:
      out = closed(lambda_iid(IidKind::Uniform01, p("hi")), "published constant");
      break;
    case Family::IidBernoulli: out = closed(lambda_iid(IidKind::Bernoulli, p("p"))); break;
    case Family::IidGeometric: out = closed(lambda_iid(IidKind::Geometric, p("p"))); break;
    case Family::IidDiscreteUniform:
      if (p("m") == 1.0) {
        out = closed(lambda_iid(IidKind::DiscreteUniform, 1.0), "published constant");
      } else {
        out = closed(chain::lambda_discrete(*c.matched), "difference chain");
      }
      break;
    case Family::DiagOffdiagExponential: out = closed(lambda_diag_offdiag_exp(p("mu"), p("nu"))); break;
    case Family::PureExponential:
      out = closed(spectral::lambda_pure_random({p("mu"), p("nu"), p("sigma"), p("tau")}),
                   "spectral linear system");
      break;
    case Family::ZeroOffdiag:
      out = closed(lambda_zero_pattern_exp(ZeroPattern::ZeroOffdiag, p("mu"), p("tau")));
      break;
    case Family::ZeroDiag:
      out = closed(lambda_zero_pattern_exp(ZeroPattern::ZeroDiag, p("nu"), p("sigma")));
      break;
    case Family::ZeroRow:
      out = closed(lambda_zero_pattern_exp(ZeroPattern::ZeroRow, p("mu"), p("nu")));
      break;
    case Family::OneZeroDiag_SigmaEqMu:
      out = closed(lambda_one_zero_entry_exp(OneZeroCase::OneZeroDiag_SigmaEqMu, p("mu"), p("nu")));
      break;
    case Family::OneZeroDiag_SigmaEqNu:
      out = closed(lambda_one_zero_entry_exp(OneZeroCase::OneZeroDiag_SigmaEqNu, p("mu"), p("nu")));
      break;
    case Family::OneZeroOffdiag_NuEqMu:
      out = closed(lambda_one_zero_entry_exp(OneZeroCase::OneZeroOffdiag_NuEqMu, p("mu"), p("tau")));
      break;
    case Family::OneZeroOffdiag_TauEqMu:
      out = closed(lambda_one_zero_entry_exp(OneZeroCase::OneZeroOffdiag_TauEqMu, p("mu"), p("nu")));
      break;
    case Family::ConstDiagOneRandom: out = closed(lambda_const_diag_one_random(p("mu"), p("c"))); break;
    case Family::ZeroRowConstDiag: out = closed(lambda_zero_row_const_diag(p("nu"), p("c"))); break;
    case Family::ThreeConstSymmetric: out = closed(lambda_three_const_symmetric(p("mu"), p("c"))); break;
    case Family::ZeroRowGeneral:
      if (c.law->is<Exponential>()) {
        out = closed(lambda_zero_row_exp_const(c.law->as<Exponential>().rate, p("c")),
                     "exp closed form");
      } else {
        out = closed(lambda_zero_row_general(*c.law, p("c")), "quadrature");
      }
      break;
    case Family::DiscreteFiniteSupport:
      out = closed(chain::lambda_discrete(*c.matched), "difference chain");
      break;
    case Family::NoClosedForm: return std::nullopt;
  }
  if (out) out->rational = exact_rational(c);
  return out;
}

}  // namespace mct
