#ifndef TAT_BOUNDARY_HPP
#define TAT_BOUNDARY_HPP

#include "tat/grid.hpp"
#include "tat/vec2.hpp"

namespace tat {

// Measurement square, traversed counterclockwise:
//   edge 0 bottom  (x0,y0) -> (x1,y0)
//   edge 1 right   (x1,y0) -> (x1,y1)
//   edge 2 top     (x1,y1) -> (x0,y1)
//   edge 3 left    (x0,y1) -> (x0,y0)
// Each edge carries points_per_edge samples at uniform arc spacing, starting
// at the edge's first corner; the closing corner belongs to the next edge,
// so every corner is owned by exactly one edge.
class SquareBoundary {
  public:
    SquareBoundary() = default;
    SquareBoundary(double x0, double x1, double y0, double y1, int points_per_edge);

    // Square centered in the grid with the given side, sample spacing chosen
    // to match the grid spacing as closely as an integer point count allows.
    static SquareBoundary centered_in(const Grid2D& grid, double side);

    double x0() const { return x0_; }
    double x1() const { return x1_; }
    double y0() const { return y0_; }
    double y1() const { return y1_; }
    double side() const { return x1_ - x0_; }
    int points_per_edge() const { return points_per_edge_; }
    double spacing() const { return side() / points_per_edge_; }

    Vec2 corner(int edge) const;
    // Unit tangent in the direction of increasing arc parameter.
    Vec2 tangent(int edge) const;
    Vec2 outward_normal(int edge) const;
    Vec2 point(int edge, double arc) const { return corner(edge) + tangent(edge) * arc; }
    Vec2 point(int edge, int k) const { return point(edge, k * spacing()); }

    bool contains(const Vec2& p) const {
        return p.x >= x0_ && p.x <= x1_ && p.y >= y0_ && p.y <= y1_;
    }
    // Signed distance to the square hull; negative inside.
    double signed_distance(const Vec2& p) const;
    // Nearest edge id and arc coordinate for a point on (or near) the hull.
    void locate(const Vec2& p, int& edge, double& arc) const;

    bool operator==(const SquareBoundary& o) const = default;

  private:
    double x0_ = -1.0, x1_ = 1.0, y0_ = -1.0, y1_ = 1.0;
    int points_per_edge_ = 0;
};

} // namespace tat

#endif
