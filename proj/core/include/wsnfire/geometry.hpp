#pragma once

#include <span>

namespace wsnfire {

/// Planar position in meters.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned protected region [0, width] x [0, height], in meters.
class RectRegion {
public:
    /// Throws ParameterError unless both sides are finite and positive.
    RectRegion(double width, double height);

    double width() const noexcept { return width_; }
    double height() const noexcept { return height_; }
    double area() const noexcept { return width_ * height_; }

private:
    double width_;
    double height_;
};

/// Boundary points count as inside.
bool contains(const RectRegion& region, Point p) noexcept;

/// Constant-rate elliptical front. The head advances at `rate` along
/// `heading`, the back at rate / head_to_back, and the ellipse length is
/// `length_to_breadth` times its breadth. Unit ratios give a circle.
struct EllipseShape {
    double rate = 1.0;               ///< m/s at the head
    double head_to_back = 1.0;       ///< >= 1
    double length_to_breadth = 1.0;  ///< >= 1
    double heading = 0.0;            ///< radians, counter-clockwise from +x
};

/// Throws ParameterError for non-positive rate or ratios below one.
void validate(const EllipseShape& shape);

/// Growth rates of the front geometry. At time t the front is the ellipse
/// centred `center_offset * t` ahead of the ignition along the heading, with
/// semi-axes `semi_major * t` (along heading) and `semi_minor * t`.
struct EllipseRates {
    double semi_major;
    double semi_minor;
    double center_offset;
};

EllipseRates ellipse_rates(const EllipseShape& shape);

/// Precomputed first-arrival solver for one ellipse shape, for tight loops
/// over many targets.
class EllipseReachSolver {
public:
    explicit EllipseReachSolver(const EllipseShape& shape);

    /// Time at which the front started at `ignition` first covers `target`.
    double operator()(Point ignition, Point target) const noexcept {
        return from_offset(target.x - ignition.x, target.y - ignition.y);
    }

    double from_offset(double dx, double dy) const noexcept;

private:
    double cos_heading_;
    double sin_heading_;
    double semi_major_sq_;
    double center_offset_;
    double focal_sq_;  // semi_major^2 - center_offset^2 = rate^2 / head_to_back
    double aspect_sq_;
};

/// Smallest t >= 0 with `target` on the front boundary. Zero iff the target
/// is the ignition point. Throws ParameterError on an invalid shape.
double ellipse_reach_time(const EllipseShape& shape, Point ignition, Point target);

/// One burning front evaluated at elapsed time `t`.
struct Front {
    Point ignition;
    EllipseShape shape;
    double t = 0.0;
};

/// Area of (union of fronts) ∩ region.
///
/// Integrates the exact union chord length along horizontal scanlines.
/// The y-range is split at every ellipse extremum, region edge and
/// ellipse/side-wall crossing; each piece is integrated with a cosine-mapped
/// midpoint rule, which absorbs the square-root behaviour of chords at
/// ellipse tips. `tol` is the target relative error and sets the number of
/// nodes per piece. The result is a deterministic function of the inputs.
double burned_union_area(std::span<const Front> fronts, const RectRegion& region,
                         double tol = 1e-3);

}  // namespace wsnfire
