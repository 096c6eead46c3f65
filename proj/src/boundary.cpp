#include "tat/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tat {

SquareBoundary::SquareBoundary(double x0, double x1, double y0, double y1, int points_per_edge)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), points_per_edge_(points_per_edge) {
    if (!(x1 > x0) || !(y1 > y0))
        throw std::invalid_argument("SquareBoundary: degenerate extents");
    if (std::abs((x1 - x0) - (y1 - y0)) > 1e-12 * (x1 - x0))
        throw std::invalid_argument("SquareBoundary: measurement surface must be square");
    if (points_per_edge < 4)
        throw std::invalid_argument("SquareBoundary: need at least 4 points per edge");
}

SquareBoundary SquareBoundary::centered_in(const Grid2D& grid, double side) {
    const double cx = 0.5 * (grid.x_min + grid.x_max);
    const double cy = 0.5 * (grid.y_min + grid.y_max);
    if (side >= (grid.x_max - grid.x_min) || side >= (grid.y_max - grid.y_min))
        throw std::invalid_argument("SquareBoundary: square must lie strictly inside the grid");
    const int ppe = std::max(4, static_cast<int>(std::lround(side / grid.dx())));
    return SquareBoundary(cx - side / 2, cx + side / 2, cy - side / 2, cy + side / 2, ppe);
}

Vec2 SquareBoundary::corner(int edge) const {
    switch (edge) {
        case 0: return {x0_, y0_};
        case 1: return {x1_, y0_};
        case 2: return {x1_, y1_};
        case 3: return {x0_, y1_};
        default: throw std::out_of_range("SquareBoundary: edge index");
    }
}

Vec2 SquareBoundary::tangent(int edge) const {
    switch (edge) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        case 3: return {0, -1};
        default: throw std::out_of_range("SquareBoundary: edge index");
    }
}

Vec2 SquareBoundary::outward_normal(int edge) const {
    switch (edge) {
        case 0: return {0, -1};
        case 1: return {1, 0};
        case 2: return {0, 1};
        case 3: return {-1, 0};
        default: throw std::out_of_range("SquareBoundary: edge index");
    }
}

double SquareBoundary::signed_distance(const Vec2& p) const {
    const double dx = std::max({x0_ - p.x, p.x - x1_});
    const double dy = std::max({y0_ - p.y, p.y - y1_});
    if (dx <= 0.0 && dy <= 0.0) return std::max(dx, dy);
    return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
}

void SquareBoundary::locate(const Vec2& p, int& edge, double& arc) const {
    // Distances to the four edge lines; the closest wins.
    const double d[4] = {std::abs(p.y - y0_), std::abs(p.x - x1_), std::abs(p.y - y1_),
                         std::abs(p.x - x0_)};
    edge = 0;
    for (int e = 1; e < 4; ++e)
        if (d[e] < d[edge]) edge = e;
    const Vec2 rel = p - corner(edge);
    arc = std::clamp(rel.dot(tangent(edge)), 0.0, side());
}

} // namespace tat
