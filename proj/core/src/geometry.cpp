#include "wsnfire/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "wsnfire/errors.hpp"

namespace wsnfire {

RectRegion::RectRegion(double width, double height) : width_(width), height_(height) {
    if (!(std::isfinite(width) && std::isfinite(height) && width > 0.0 && height > 0.0)) {
        std::ostringstream msg;
        msg << "region sides must be finite and positive, got " << width << " x " << height;
        throw ParameterError(msg.str());
    }
}

bool contains(const RectRegion& region, Point p) noexcept {
    return p.x >= 0.0 && p.x <= region.width() && p.y >= 0.0 && p.y <= region.height();
}

void validate(const EllipseShape& shape) {
    if (!(std::isfinite(shape.rate) && shape.rate > 0.0)) {
        throw ParameterError("rate of spread must be positive");
    }
    if (!(shape.head_to_back >= 1.0) || !std::isfinite(shape.head_to_back)) {
        throw ParameterError("head-to-back ratio must be >= 1");
    }
    if (!(shape.length_to_breadth >= 1.0) || !std::isfinite(shape.length_to_breadth)) {
        throw ParameterError("length-to-breadth ratio must be >= 1");
    }
    if (!std::isfinite(shape.heading)) {
        throw ParameterError("heading must be finite");
    }
}

EllipseRates ellipse_rates(const EllipseShape& shape) {
    validate(shape);
    // Total length Rt(1 + 1/HB): head at +Rt, back at -Rt/HB from the ignition.
    const double inv_hb = 1.0 / shape.head_to_back;
    const double semi_major = 0.5 * shape.rate * (1.0 + inv_hb);
    return {semi_major, semi_major / shape.length_to_breadth,
            0.5 * shape.rate * (1.0 - inv_hb)};
}

EllipseReachSolver::EllipseReachSolver(const EllipseShape& shape) {
    const EllipseRates r = ellipse_rates(shape);
    cos_heading_ = std::cos(shape.heading);
    sin_heading_ = std::sin(shape.heading);
    semi_major_sq_ = r.semi_major * r.semi_major;
    center_offset_ = r.center_offset;
    focal_sq_ = shape.rate * shape.rate / shape.head_to_back;
    aspect_sq_ = shape.length_to_breadth * shape.length_to_breadth;
}

double EllipseReachSolver::from_offset(double dx, double dy) const noexcept {
    // Head-aligned frame.
    const double u = dx * cos_heading_ + dy * sin_heading_;
    const double v = -dx * sin_heading_ + dy * cos_heading_;
    // Positive root of focal_sq*t^2 + 2*c*u*t - (u^2 + LB^2 v^2) = 0.
    const double q = u * u + aspect_sq_ * v * v;
    const double disc = std::sqrt(semi_major_sq_ * u * u + focal_sq_ * aspect_sq_ * v * v);
    const double cu = center_offset_ * u;
    if (cu <= 0.0) {
        return (disc - cu) / focal_sq_;
    }
    return q / (cu + disc);
}

double ellipse_reach_time(const EllipseShape& shape, Point ignition, Point target) {
    return EllipseReachSolver(shape)(ignition, target);
}

namespace {

// Front at a fixed time as the quadratic form
// alpha*dx^2 + 2*beta*dx*dy + gamma*dy^2 <= 1 around (cx, cy).
struct Conic {
    double cx, cy;
    double alpha, beta, gamma;
    double det;
    double half_height;
};

Conic make_conic(const Front& f) {
    const EllipseRates r = ellipse_rates(f.shape);
    const double ch = std::cos(f.shape.heading);
    const double sh = std::sin(f.shape.heading);
    const double a = r.semi_major * f.t;
    const double b = r.semi_minor * f.t;
    const double ia = 1.0 / (a * a);
    const double ib = 1.0 / (b * b);
    Conic c{};
    c.cx = f.ignition.x + r.center_offset * f.t * ch;
    c.cy = f.ignition.y + r.center_offset * f.t * sh;
    c.alpha = ch * ch * ia + sh * sh * ib;
    c.gamma = sh * sh * ia + ch * ch * ib;
    c.beta = ch * sh * (ia - ib);
    c.det = c.alpha * c.gamma - c.beta * c.beta;
    c.half_height = std::sqrt(c.alpha / c.det);
    return c;
}

// Adds the y-coordinates where the conic crosses the vertical line x = x0.
void add_wall_crossings(const Conic& c, double x0, std::vector<double>& out) {
    const double dx = x0 - c.cx;
    const double disc = c.beta * c.beta * dx * dx - c.gamma * (c.alpha * dx * dx - 1.0);
    if (disc <= 0.0) return;
    const double root = std::sqrt(disc);
    out.push_back(c.cy + (-c.beta * dx - root) / c.gamma);
    out.push_back(c.cy + (-c.beta * dx + root) / c.gamma);
}

struct Interval {
    double lo, hi;
};

// Length of (union of chords at height y) ∩ [0, width].
double union_chord(std::span<const Conic> conics, double y, double width,
                   std::vector<Interval>& scratch) {
    scratch.clear();
    for (const Conic& c : conics) {
        const double dy = y - c.cy;
        const double disc = c.alpha - c.det * dy * dy;
        if (disc <= 0.0) continue;
        const double root = std::sqrt(disc);
        const double mid = c.cx - c.beta * dy / c.alpha;
        const double lo = std::max(0.0, mid - root / c.alpha);
        const double hi = std::min(width, mid + root / c.alpha);
        if (hi > lo) scratch.push_back({lo, hi});
    }
    if (scratch.empty()) return 0.0;
    if (scratch.size() == 1) return scratch.front().hi - scratch.front().lo;
    std::sort(scratch.begin(), scratch.end(),
              [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
    double total = 0.0;
    Interval run = scratch.front();
    for (std::size_t i = 1; i < scratch.size(); ++i) {
        if (scratch[i].lo > run.hi) {
            total += run.hi - run.lo;
            run = scratch[i];
        } else {
            run.hi = std::max(run.hi, scratch[i].hi);
        }
    }
    return total + (run.hi - run.lo);
}

}  // namespace

double burned_union_area(std::span<const Front> fronts, const RectRegion& region, double tol) {
    if (!(tol > 0.0)) throw ParameterError("union area tolerance must be positive");

    std::vector<Conic> conics;
    conics.reserve(fronts.size());
    for (const Front& f : fronts) {
        if (!(f.t >= 0.0)) throw DomainError("front time must be non-negative");
        validate(f.shape);
        if (f.t > 0.0) conics.push_back(make_conic(f));
    }
    if (conics.empty()) return 0.0;

    const double width = region.width();
    const double height = region.height();
    double y_lo = height;
    double y_hi = 0.0;
    std::vector<double> cuts{0.0, height};
    for (const Conic& c : conics) {
        y_lo = std::min(y_lo, c.cy - c.half_height);
        y_hi = std::max(y_hi, c.cy + c.half_height);
        cuts.push_back(c.cy - c.half_height);
        cuts.push_back(c.cy + c.half_height);
        add_wall_crossings(c, 0.0, cuts);
        add_wall_crossings(c, width, cuts);
    }
    y_lo = std::max(y_lo, 0.0);
    y_hi = std::min(y_hi, height);
    if (!(y_hi > y_lo)) return 0.0;

    std::erase_if(cuts, [&](double y) { return !(y >= y_lo && y <= y_hi); });
    cuts.push_back(y_lo);
    cuts.push_back(y_hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const int nodes = static_cast<int>(std::clamp(std::ceil(4.0 / std::sqrt(tol)), 8.0, 8192.0));
    const double step = std::numbers::pi / nodes;
    std::vector<Interval> scratch;
    scratch.reserve(conics.size());

    double area = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double y0 = cuts[s];
        const double half = 0.5 * (cuts[s + 1] - y0);
        if (half <= 0.0) continue;
        // y = y0 + half*(1 - cos(theta)), dy = half*sin(theta) dtheta.
        double piece = 0.0;
        for (int k = 0; k < nodes; ++k) {
            const double theta = (k + 0.5) * step;
            const double y = y0 + half * (1.0 - std::cos(theta));
            piece += union_chord(conics, y, width, scratch) * std::sin(theta);
        }
        area += piece * half * step;
    }
    return std::min(area, region.area());
}

}  // namespace wsnfire
