#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

enum class Errc {
  parse,
  invalid_argument,
  domain,
  unsupported,
  too_large,
  inconsistent,
  io,
  internal,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// layer maps them one-to-one onto liecoh_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace liecoh
