#ifndef GODRAD_BOUNDARY_HPP_
#define GODRAD_BOUNDARY_HPP_
//! \file boundary.hpp
//! \brief Ghost-cell fills for the 1D grid.

#include <cstddef>
#include <span>
#include <string_view>

#include "godrad/core.hpp"

namespace godrad {

enum class BoundaryKind { outflow, periodic };

BoundaryKind parse_boundary(std::string_view name);
std::string_view to_string(BoundaryKind bc);

//! Fill n_ghost layers on both ends of a ghosted array with n_interior interior values.
//! outflow copies the nearest interior value, periodic wraps around.
template <typename T>
void fill_ghosts(std::span<T> values, std::size_t n_ghost, BoundaryKind bc) {
  const std::size_t n = values.size() - 2 * n_ghost;
  for (std::size_t j = 0; j < n_ghost; ++j) {
    T& lo = values[j];
    T& hi = values[n_ghost + n + j];
    if (bc == BoundaryKind::periodic) {
      lo = values[n + j];  // interior index n - n_ghost + j
      hi = values[n_ghost + j];
    } else {
      lo = values[n_ghost];
      hi = values[n_ghost + n - 1];
    }
  }
}

inline void fill_boundary(GridField& grid, BoundaryKind bc) {
  fill_ghosts(grid.all(), grid.n_ghost(), bc);
}

}  // namespace godrad

#endif  // GODRAD_BOUNDARY_HPP_
