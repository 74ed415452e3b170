#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mct {

enum class Errc {
  SingularMatrix,
  MaxDepth,
  NonFinite,
  UnsupportedParam,
  RatioDegenerate,
  SupportExplosion,
  InvalidArgument,
  InvalidModel,
  InvalidConfig,
};

std::string_view to_string(Errc code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mct
