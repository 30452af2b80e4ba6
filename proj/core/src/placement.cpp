#include "wsnfire/placement.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "wsnfire/errors.hpp"

namespace wsnfire {

double characteristic_distance(double area, std::size_t n) {
    if (n == 0) throw ParameterError("sensor count must be at least 1");
    if (!(area > 0.0) || !std::isfinite(area)) throw ParameterError("area must be positive");
    return std::sqrt(area / static_cast<double>(n));
}

namespace {

// Number of spacing steps along `side`; throws if not an integer multiple.
std::size_t lattice_steps(double side, double spacing, const char* name) {
    const double ratio = side / spacing;
    const double steps = std::round(ratio);
    if (steps < 1.0 || std::abs(ratio - steps) > 1e-9 * std::max(1.0, ratio)) {
        std::ostringstream msg;
        msg << "region " << name << " " << side << " is not an integer multiple of spacing "
            << spacing << " (remainder " << side - std::floor(ratio) * spacing << ")";
        throw ParameterError(msg.str());
    }
    return static_cast<std::size_t>(steps);
}

}  // namespace

SensorLayout grid_layout(const RectRegion& region, double spacing) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw ParameterError("grid spacing must be positive");
    }
    const std::size_t nx = lattice_steps(region.width(), spacing, "width");
    const std::size_t ny = lattice_steps(region.height(), spacing, "height");

    SensorLayout layout;
    layout.characteristic_distance = spacing;
    layout.positions.reserve((nx + 1) * (ny + 1));
    for (std::size_t j = 0; j <= ny; ++j) {
        // Pin the last row/column to the boundary exactly.
        const double y = j == ny ? region.height() : static_cast<double>(j) * spacing;
        for (std::size_t i = 0; i <= nx; ++i) {
            const double x = i == nx ? region.width() : static_cast<double>(i) * spacing;
            layout.positions.push_back({x, y});
        }
    }
    return layout;
}

SensorLayout covering_grid_layout(const RectRegion& region, double max_spacing) {
    if (!(max_spacing > 0.0) || !std::isfinite(max_spacing)) {
        throw ParameterError("grid spacing must be positive");
    }
    // The slack keeps exact multiples from gaining a step through rounding.
    auto steps = [&](double side) {
        return static_cast<std::size_t>(std::max(1.0, std::ceil(side / max_spacing * (1 - 1e-12))));
    };
    const std::size_t nx = steps(region.width());
    const std::size_t ny = steps(region.height());
    const double dx = region.width() / static_cast<double>(nx);
    const double dy = region.height() / static_cast<double>(ny);

    SensorLayout layout;
    layout.characteristic_distance = std::max(dx, dy);
    layout.positions.reserve((nx + 1) * (ny + 1));
    for (std::size_t j = 0; j <= ny; ++j) {
        const double y = j == ny ? region.height() : static_cast<double>(j) * dy;
        for (std::size_t i = 0; i <= nx; ++i) {
            const double x = i == nx ? region.width() : static_cast<double>(i) * dx;
            layout.positions.push_back({x, y});
        }
    }
    return layout;
}

void fill_uniform(const RectRegion& region, std::size_t n, Engine& engine,
                  std::vector<Point>& out) {
    out.resize(n);
    for (Point& p : out) {
        p.x = uniform01(engine) * region.width();
        p.y = uniform01(engine) * region.height();
    }
}

SensorLayout uniform_layout(const RectRegion& region, std::size_t n, std::uint64_t seed) {
    SensorLayout layout;
    layout.characteristic_distance = characteristic_distance(region.area(), n);
    Engine engine = make_stream(seed, 0, StreamKind::Layout);
    fill_uniform(region, n, engine, layout.positions);
    return layout;
}

void write_layout_csv(std::ostream& os, const SensorLayout& layout) {
    os << "x,y\n";
    os.precision(17);
    for (const Point& p : layout.positions) os << p.x << ',' << p.y << '\n';
}

}  // namespace wsnfire
