#ifndef TAT_SPEED_HPP
#define TAT_SPEED_HPP

#include "tat/grid.hpp"
#include "tat/vec2.hpp"

namespace tat {

// Wave speed c(x) > 0 on a grid. The field must be identically 1 in a margin
// band near the grid boundary so that outgoing waves hit the absorbing layer
// in a homogeneous medium and the boundary of the measurement square sits in
// (nearly) unit speed.
//
// Off-grid evaluation uses Catmull-Rom bicubic interpolation, which is C^1
// and reproduces constants and linears; its analytic derivatives provide
// grad c for ray tracing.
class SpeedField {
  public:
    // margin_fraction: width of the c == 1 band, as a fraction of the grid
    // side, measured inward from each grid edge.
    SpeedField(ScalarField2D field, double margin_fraction = 0.1);

    const ScalarField2D& field() const { return field_; }
    const Grid2D& grid() const { return field_.grid(); }
    double c_min() const { return c_min_; }
    double c_max() const { return c_max_; }
    double margin_fraction() const { return margin_fraction_; }

    double at(int ix, int iy) const { return field_.re(ix, iy); }

    // Interpolated speed and gradient at an arbitrary point.
    double value(const Vec2& p) const;
    Vec2 gradient(const Vec2& p) const;

    bool is_constant() const { return c_min_ == c_max_; }

  private:
    ScalarField2D field_;
    double c_min_ = 0.0;
    double c_max_ = 0.0;
    double margin_fraction_ = 0.1;
};

// Speed field c(x) = c0 + amplitude * exp(-(|x - center|^2)^2 / width).
// c0 = 1 matches the measurement geometry assumptions; amplitude > 0 makes a
// fast spot, amplitude < 0 a slow spot.
SpeedField make_gaussian_bump_speed(const Vec2& center, double amplitude, double width,
                                    const Grid2D& grid, double margin_fraction = 0.1);

// Sum of bumps on a common background c0 (used by experiment configs).
struct SpeedBump {
    Vec2 center;
    double amplitude = 0.0;
    double width = 0.25;
};
SpeedField make_bump_sum_speed(double c0, const std::vector<SpeedBump>& bumps, const Grid2D& grid,
                               double margin_fraction = 0.1);

SpeedField make_constant_speed(double c0, const Grid2D& grid, double margin_fraction = 0.1);

} // namespace tat

#endif
