#include <cstdlib>
#include <string>

#include "regdiv/common.hpp"

namespace regdiv {

namespace {

void override_from(const char* name, std::uint64_t& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || raw[0] == '-') {
    throw DomainError(std::string(name) + " must be a nonnegative integer, got '" + raw + "'");
  }
  field = v;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  override_from("REGDIV_MAX_M", l.max_m);
  override_from("REGDIV_MAX_DEPTH", l.max_depth);
  override_from("REGDIV_MAX_COUNT", l.max_count);
  return l;
}

}  // namespace regdiv
