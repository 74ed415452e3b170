#include "mct/model.hpp"

namespace mct {

std::string_view to_string(Symmetry g) {
  switch (g) {
    case Symmetry::Identity: return "identity";
    case Symmetry::Transpose: return "transpose";
    case Symmetry::Swap: return "swap";
    case Symmetry::TransposeSwap: return "transpose∘swap";
  }
  return "?";
}

MatrixModel transform_apply(const MatrixModel& m, Symmetry g) {
  switch (g) {
    case Symmetry::Identity: return m;
    case Symmetry::Transpose: return {m.a11, m.a21, m.a12, m.a22};
    case Symmetry::Swap: return {m.a22, m.a21, m.a12, m.a11};
    case Symmetry::TransposeSwap: return {m.a22, m.a12, m.a21, m.a11};
  }
  return m;
}

Symmetry compose(Symmetry outer, Symmetry inner) {
  // Klein four-group: every element is an involution and the group is abelian.
  return static_cast<Symmetry>(static_cast<int>(outer) ^ static_cast<int>(inner));
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 20> kFamilyNames = {{
    {Family::IidExponential, "IidExponential"},
    {Family::IidUniform01, "IidUniform01"},
    {Family::IidBernoulli, "IidBernoulli"},
    {Family::IidGeometric, "IidGeometric"},
    {Family::IidDiscreteUniform, "IidDiscreteUniform"},
    {Family::DiagOffdiagExponential, "DiagOffdiagExponential"},
    {Family::PureExponential, "PureExponential"},
    {Family::ZeroOffdiag, "ZeroOffdiag"},
    {Family::ZeroDiag, "ZeroDiag"},
    {Family::ZeroRow, "ZeroRow"},
    {Family::OneZeroDiag_SigmaEqMu, "OneZeroDiag_SigmaEqMu"},
    {Family::OneZeroDiag_SigmaEqNu, "OneZeroDiag_SigmaEqNu"},
    {Family::OneZeroOffdiag_NuEqMu, "OneZeroOffdiag_NuEqMu"},
    {Family::OneZeroOffdiag_TauEqMu, "OneZeroOffdiag_TauEqMu"},
    {Family::ConstDiagOneRandom, "ConstDiagOneRandom"},
    {Family::ZeroRowConstDiag, "ZeroRowConstDiag"},
    {Family::ZeroRowGeneral, "ZeroRowGeneral"},
    {Family::ThreeConstSymmetric, "ThreeConstSymmetric"},
    {Family::DiscreteFiniteSupport, "DiscreteFiniteSupport"},
    {Family::NoClosedForm, "NoClosedForm"},
}};

// Most specific first; NoClosedForm is the fallthrough.
constexpr std::array<Family, 19> kPriority = {
    Family::IidExponential,
    Family::IidUniform01,
    Family::IidBernoulli,
    Family::IidGeometric,
    Family::IidDiscreteUniform,
    Family::DiagOffdiagExponential,
    Family::PureExponential,
    Family::ConstDiagOneRandom,
    Family::ZeroRowConstDiag,
    Family::ThreeConstSymmetric,
    Family::ZeroRowGeneral,
    Family::ZeroOffdiag,
    Family::ZeroDiag,
    Family::ZeroRow,
    Family::OneZeroDiag_SigmaEqMu,
    Family::OneZeroDiag_SigmaEqNu,
    Family::OneZeroOffdiag_NuEqMu,
    Family::OneZeroOffdiag_TauEqMu,
    Family::DiscreteFiniteSupport,
};

bool zero(const Distribution& d) { return d.is_constant(0.0); }
bool expo(const Distribution& d) { return d.is<Exponential>(); }
double rate(const Distribution& d) { return d.as<Exponential>().rate; }
double constant(const Distribution& d) { return d.as<Constant>().value; }

template <class T, class Key>
std::optional<double> common(const MatrixModel& m, Key key) {
  for (const auto* d : {&m.a11, &m.a12, &m.a21, &m.a22})
    if (!d->template is<T>()) return std::nullopt;
  const double v = key(m.a11.template as<T>());
  for (const auto* d : {&m.a12, &m.a21, &m.a22})
    if (key(d->template as<T>()) != v) return std::nullopt;
  return v;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [family, n] : kFamilyNames)
    if (n == name) return family;
  return std::nullopt;
}

const std::array<Family, 19>& family_priority() { return kPriority; }

std::optional<AnalyticCase> match_family(const MatrixModel& m, Family f) {
  const Distribution& alpha = m.a11;
  const Distribution& beta = m.a12;
  const Distribution& gamma = m.a21;
  const Distribution& delta = m.a22;

  AnalyticCase out;
  out.family = f;
  out.matched = m;
  auto hit = [&](std::map<std::string, double> params) -> std::optional<AnalyticCase> {
    out.params = std::move(params);
    return out;
  };

  switch (f) {
    case Family::IidExponential:
      if (auto r = common<Exponential>(m, [](const Exponential& d) { return d.rate; }))
        return hit({{"mu", *r}});
      break;
    case Family::IidUniform01:
      if (alpha.is<UniformContinuous>() && alpha.as<UniformContinuous>().lo == 0.0) {
        if (auto h = common<UniformContinuous>(m, [](const UniformContinuous& d) {
              return d.lo == 0.0 ? d.hi : -1.0;
            }))
          return hit({{"hi", *h}});
      }
      break;
    case Family::IidBernoulli:
      if (auto p = common<Bernoulli>(m, [](const Bernoulli& d) { return d.p; }))
        return hit({{"p", *p}});
      break;
    case Family::IidGeometric:
      if (auto p = common<Geometric>(m, [](const Geometric& d) { return d.p; }))
        return hit({{"p", *p}});
      break;
    case Family::IidDiscreteUniform:
      if (auto k = common<DiscreteUniform>(
              m, [](const DiscreteUniform& d) { return static_cast<double>(d.m); }))
        return hit({{"m", *k}});
      break;
    case Family::DiagOffdiagExponential:
      if (expo(alpha) && expo(beta) && expo(gamma) && expo(delta) && rate(alpha) == rate(delta) &&
          rate(beta) == rate(gamma))
        return hit({{"mu", rate(alpha)}, {"nu", rate(beta)}});
      break;
    case Family::PureExponential:
      if (expo(alpha) && expo(beta) && expo(gamma) && expo(delta))
        return hit({{"mu", rate(alpha)},
                    {"nu", rate(beta)},
                    {"sigma", rate(gamma)},
                    {"tau", rate(delta)}});
      break;
    case Family::ConstDiagOneRandom:
      if (expo(alpha) && zero(beta) && zero(gamma) && delta.is_constant())
        return hit({{"mu", rate(alpha)}, {"c", constant(delta)}});
      break;
    case Family::ZeroRowConstDiag:
      if (alpha.is_constant() && expo(beta) && zero(gamma) && zero(delta))
        return hit({{"nu", rate(beta)}, {"c", constant(alpha)}});
      break;
    case Family::ThreeConstSymmetric:
      if (expo(alpha) && beta.is_constant() && beta == gamma && beta == delta)
        return hit({{"mu", rate(alpha)}, {"c", constant(beta)}});
      break;
    case Family::ZeroRowGeneral:
      if (!alpha.is_constant() && support_min(alpha) >= 0.0 && beta.is_constant() &&
          zero(gamma) && zero(delta)) {
        out.law = alpha;
        return hit({{"c", constant(beta)}, {"a", mean(alpha)}});
      }
      break;
    case Family::ZeroOffdiag:
      if (expo(alpha) && zero(beta) && zero(gamma) && expo(delta))
        return hit({{"mu", rate(alpha)}, {"tau", rate(delta)}});
      break;
    case Family::ZeroDiag:
      if (zero(alpha) && expo(beta) && expo(gamma) && zero(delta))
        return hit({{"nu", rate(beta)}, {"sigma", rate(gamma)}});
      break;
    case Family::ZeroRow:
      if (expo(alpha) && expo(beta) && zero(gamma) && zero(delta))
        return hit({{"mu", rate(alpha)}, {"nu", rate(beta)}});
      break;
    case Family::OneZeroDiag_SigmaEqMu:
      if (expo(alpha) && expo(beta) && expo(gamma) && zero(delta) && rate(gamma) == rate(alpha))
        return hit({{"mu", rate(alpha)}, {"nu", rate(beta)}});
      break;
    case Family::OneZeroDiag_SigmaEqNu:
      if (expo(alpha) && expo(beta) && expo(gamma) && zero(delta) && rate(gamma) == rate(beta))
        return hit({{"mu", rate(alpha)}, {"nu", rate(beta)}});
      break;
    case Family::OneZeroOffdiag_NuEqMu:
      if (expo(alpha) && expo(beta) && zero(gamma) && expo(delta) && rate(beta) == rate(alpha))
        return hit({{"mu", rate(alpha)}, {"tau", rate(delta)}});
      break;
    case Family::OneZeroOffdiag_TauEqMu:
      if (expo(alpha) && expo(beta) && zero(gamma) && expo(delta) && rate(delta) == rate(alpha))
        return hit({{"mu", rate(alpha)}, {"nu", rate(beta)}});
      break;
    case Family::DiscreteFiniteSupport:
      if (has_finite_support(alpha) && has_finite_support(beta) && has_finite_support(gamma) &&
          has_finite_support(delta))
        return hit({});
      break;
    case Family::NoClosedForm:
      break;
  }
  return std::nullopt;
}

AnalyticCase classify(const MatrixModel& m) {
  for (Family f : kPriority) {
    for (Symmetry g : kSymmetries) {
      if (auto c = match_family(transform_apply(m, g), f)) {
        c->transform = g;
        return *c;
      }
    }
  }
  AnalyticCase none;
  none.matched = m;
  return none;
}

}  // namespace mct
