#include "mct/model_json.hpp"

#include <fstream>

#include "mct/error.hpp"

namespace mct {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::InvalidModel, where + ": " + what);
}

double number(const json& j, const std::string& where, const char* key) {
  const std::string path = where + "." + key;
  if (!j.contains(key)) fail(path, "missing");
  if (!j.at(key).is_number()) fail(path, "expected a number");
  return j.at(key).get<double>();
}

std::vector<double> numbers(const json& j, const std::string& where, const char* key) {
  const std::string path = where + "." + key;
  if (!j.contains(key)) fail(path, "missing");
  if (!j.at(key).is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) fail(path, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Distribution distribution_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("dist") || !j.at("dist").is_string()) fail(where + ".dist", "missing or not a string");
  const auto kind = j.at("dist").get<std::string>();
  try {
    if (kind == "constant") return Constant{number(j, where, "value")};
    if (kind == "exponential") return Exponential{number(j, where, "rate")};
    if (kind == "uniform") return UniformContinuous{number(j, where, "lo"), number(j, where, "hi")};
    if (kind == "bernoulli") return Bernoulli{number(j, where, "p")};
    if (kind == "geometric") return Geometric{number(j, where, "p")};
    if (kind == "discrete_uniform") {
      const double m = number(j, where, "m");
      if (m < 0 || m != static_cast<double>(static_cast<std::uint32_t>(m)))
        fail(where + ".m", "expected a nonnegative integer");
      return DiscreteUniform{static_cast<std::uint32_t>(m)};
    }
    if (kind == "tabulated_cdf") return TabulatedCdf{numbers(j, where, "t"), numbers(j, where, "F")};
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidModel) throw;
    fail(where, e.what());
  }
  fail(where + ".dist", "unknown distribution '" + kind + "'");
}

json distribution_to_json(const Distribution& d) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Constant>) return {{"dist", "constant"}, {"value", x.value}};
        if constexpr (std::is_same_v<T, Exponential>) return {{"dist", "exponential"}, {"rate", x.rate}};
        if constexpr (std::is_same_v<T, UniformContinuous>)
          return {{"dist", "uniform"}, {"lo", x.lo}, {"hi", x.hi}};
        if constexpr (std::is_same_v<T, Bernoulli>) return {{"dist", "bernoulli"}, {"p", x.p}};
        if constexpr (std::is_same_v<T, Geometric>) return {{"dist", "geometric"}, {"p", x.p}};
        if constexpr (std::is_same_v<T, DiscreteUniform>) return {{"dist", "discrete_uniform"}, {"m", x.m}};
        if constexpr (std::is_same_v<T, TabulatedCdf>) return {{"dist", "tabulated_cdf"}, {"t", x.t}, {"F", x.F}};
      },
      d.variant());
}

MatrixModel model_from_json(const json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("entries") || !j.at("entries").is_object()) fail("entries", "missing or not an object");
  const json& e = j.at("entries");
  auto entry = [&](const char* key) {
    const std::string where = std::string("entries.") + key;
    if (!e.contains(key)) fail(where, "missing");
    return distribution_from_json(e.at(key), where);
  };
  return MatrixModel{entry("a11"), entry("a12"), entry("a21"), entry("a22")};
}

json model_to_json(const MatrixModel& m) {
  return {{"entries",
           {{"a11", distribution_to_json(m.a11)},
            {"a12", distribution_to_json(m.a12)},
            {"a21", distribution_to_json(m.a21)},
            {"a22", distribution_to_json(m.a22)}}}};
}

MatrixModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidModel, path.string() + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidModel, path.string() + ": malformed JSON: " + e.what());
  }
  return model_from_json(j);
}

}  // namespace mct
