#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wsnfire/geometry.hpp"
#include "wsnfire/random.hpp"

namespace wsnfire {

struct SensorLayout {
    std::vector<Point> positions;
    double characteristic_distance = 0.0;  ///< meters
};

/// Density parameter sqrt(area / n).
double characteristic_distance(double area, std::size_t n);

/// Square lattice with nodes at (i*spacing, j*spacing), both boundaries
/// included. Both region sides must be integer multiples of `spacing`.
SensorLayout grid_layout(const RectRegion& region, double spacing);

/// Lattice with the fewest steps per side such that neither spacing exceeds
/// `max_spacing`: W / ceil(W / s) across, H / ceil(H / s) down, boundaries
/// included. Reduces to grid_layout when the sides are multiples of s.
SensorLayout covering_grid_layout(const RectRegion& region, double max_spacing);

/// `n` i.i.d. uniform sensors, reproducible from `seed`
/// (stream index 0, StreamKind::Layout).
SensorLayout uniform_layout(const RectRegion& region, std::size_t n, std::uint64_t seed);

/// Overwrites `out` with `n` uniform points drawn from `engine`.
void fill_uniform(const RectRegion& region, std::size_t n, Engine& engine,
                  std::vector<Point>& out);

/// CSV with header `x,y`, one sensor per row.
void write_layout_csv(std::ostream& os, const SensorLayout& layout);

}  // namespace wsnfire
