#include "liecoh/error.hpp"

namespace liecoh {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::domain: return "domain";
    case Errc::unsupported: return "unsupported";
    case Errc::too_large: return "too_large";
    case Errc::inconsistent: return "inconsistent";
    case Errc::io: return "io";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace liecoh
