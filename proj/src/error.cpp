#include "matecensus/error.hpp"

namespace matecensus {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::Unsupported: return "Unsupported";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InternalDivisionInexact: return "InternalDivisionInexact";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MixedOrder: return "MixedOrder";
    case Errc::MembersNotCollected: return "MembersNotCollected";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace matecensus
