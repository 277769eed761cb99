#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matecensus {

enum class Errc {
  MalformedGraph6,
  Unsupported,
  Disconnected,
  InternalDivisionInexact,
  TooLarge,
  MixedOrder,
  MembersNotCollected,
  InvalidArgument,
  Io,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace matecensus
