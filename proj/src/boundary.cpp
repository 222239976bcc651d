#include "godrad/boundary.hpp"

#include <string>

namespace godrad {

BoundaryKind parse_boundary(std::string_view name) {
  if (name == "outflow") return BoundaryKind::outflow;
  if (name == "periodic") return BoundaryKind::periodic;
  throw ConfigError("unknown boundary condition '" + std::string(name) + "'");
}

std::string_view to_string(BoundaryKind bc) {
  return bc == BoundaryKind::outflow ? "outflow" : "periodic";
}

}  // namespace godrad
