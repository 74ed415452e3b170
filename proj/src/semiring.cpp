#include "mct/semiring.hpp"

#include "mct/error.hpp"

namespace mct {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::MaxDepth: return "MaxDepth";
    case Errc::NonFinite: return "NonFinite";
    case Errc::UnsupportedParam: return "UnsupportedParam";
    case Errc::RatioDegenerate: return "RatioDegenerate";
    case Errc::SupportExplosion: return "SupportExplosion";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const MaxPlusValue& v) {
  if (v.is_bottom()) return os << "-inf";
  return os << v.value();
}

std::ostream& operator<<(std::ostream& os, const MaxPlusVector2& z) {
  return os << '(' << z.x << ", " << z.y << ')';
}

}  // namespace mct
