#include "gasket/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace gasket {

Config Config::from_environment() {
  Config c;
  if (const char* v = std::getenv("GASKET_MAX_ORACLE_K")) {
    int k = 0;
    const auto [ptr, ec] = std::from_chars(v, v + std::strlen(v), k);
    if (ec == std::errc() && *ptr == '\0' && k >= 2) c.max_oracle_k = k;
  }
  return c;
}

}  // namespace gasket
