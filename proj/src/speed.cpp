#include "tat/speed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tat {

namespace {

// Catmull-Rom weights for parameter t in [0,1] over samples p[-1..2].
inline void catmull_rom(double t, double w[4]) {
    const double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2 * t2 - t);
    w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
    w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
}

inline void catmull_rom_deriv(double t, double w[4]) {
    const double t2 = t * t;
    w[0] = 0.5 * (-3 * t2 + 4 * t - 1);
    w[1] = 0.5 * (9 * t2 - 10 * t);
    w[2] = 0.5 * (-9 * t2 + 8 * t + 1);
    w[3] = 0.5 * (3 * t2 - 2 * t);
}

} // namespace

SpeedField::SpeedField(ScalarField2D field, double margin_fraction)
    : field_(std::move(field)), margin_fraction_(margin_fraction) {
    if (!field_.is_real()) throw std::invalid_argument("SpeedField: field must be real");
    field_.check_finite("SpeedField");
    const Grid2D& g = field_.grid();
    c_min_ = field_.re(0, 0);
    c_max_ = c_min_;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const double v = field_.re(ix, iy);
            c_min_ = std::min(c_min_, v);
            c_max_ = std::max(c_max_, v);
        }
    if (c_min_ <= 0.0)
        throw std::invalid_argument("SpeedField: c must be positive everywhere (c_min = " +
                                    std::to_string(c_min_) + ")");
    // c == 1 margin band near the grid boundary, up to a tight tolerance.
    const double mx = margin_fraction_ * (g.x_max - g.x_min);
    const double my = margin_fraction_ * (g.y_max - g.y_min);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const bool in_margin = g.x(ix) < g.x_min + mx || g.x(ix) > g.x_max - mx ||
                                   g.y(iy) < g.y_min + my || g.y(iy) > g.y_max - my;
            if (in_margin && std::abs(field_.re(ix, iy) - 1.0) > 1e-6)
                throw std::invalid_argument("SpeedField: c != 1 in the grid margin band");
        }
}

double SpeedField::value(const Vec2& p) const {
    const Grid2D& g = grid();
    const double fx = std::clamp((p.x - g.x_min) / g.dx(), 0.0, double(g.nx - 1));
    const double fy = std::clamp((p.y - g.y_min) / g.dy(), 0.0, double(g.ny - 1));
    const int ix = std::clamp(static_cast<int>(fx), 1, g.nx - 3);
    const int iy = std::clamp(static_cast<int>(fy), 1, g.ny - 3);
    const double tx = fx - ix, ty = fy - iy;
    double wx[4], wy[4];
    catmull_rom(tx, wx);
    catmull_rom(ty, wy);
    double v = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) v += wx[i] * wy[j] * field_.re(ix - 1 + i, iy - 1 + j);
    return v;
}

Vec2 SpeedField::gradient(const Vec2& p) const {
    const Grid2D& g = grid();
    const double fx = std::clamp((p.x - g.x_min) / g.dx(), 0.0, double(g.nx - 1));
    const double fy = std::clamp((p.y - g.y_min) / g.dy(), 0.0, double(g.ny - 1));
    const int ix = std::clamp(static_cast<int>(fx), 1, g.nx - 3);
    const int iy = std::clamp(static_cast<int>(fy), 1, g.ny - 3);
    const double tx = fx - ix, ty = fy - iy;
    double wx[4], wy[4], dwx[4], dwy[4];
    catmull_rom(tx, wx);
    catmull_rom(ty, wy);
    catmull_rom_deriv(tx, dwx);
    catmull_rom_deriv(ty, dwy);
    double gx = 0.0, gy = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            const double v = field_.re(ix - 1 + i, iy - 1 + j);
            gx += dwx[i] * wy[j] * v;
            gy += wx[i] * dwy[j] * v;
        }
    return {gx / g.dx(), gy / g.dy()};
}

SpeedField make_bump_sum_speed(double c0, const std::vector<SpeedBump>& bumps, const Grid2D& grid,
                               double margin_fraction) {
    ScalarField2D f(grid, FieldKind::Real);
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            double v = c0;
            for (const SpeedBump& b : bumps) {
                const double r2 = (Vec2(grid.x(ix), grid.y(iy)) - b.center).norm_sq();
                v += b.amplitude * std::exp(-r2 * r2 / b.width);
            }
            f.re(ix, iy) = v;
        }
    // Bumps must have decayed below 1e-6 before the margin band, else the
    // SpeedField constructor rejects the field.
    return SpeedField(std::move(f), margin_fraction);
}

SpeedField make_gaussian_bump_speed(const Vec2& center, double amplitude, double width,
                                    const Grid2D& grid, double margin_fraction) {
    if (1.0 + amplitude <= 0.0)
        throw std::invalid_argument("make_gaussian_bump_speed: 1 + amplitude must be positive");
    if (width <= 0.0) throw std::invalid_argument("make_gaussian_bump_speed: width must be > 0");
    return make_bump_sum_speed(1.0, {{center, amplitude, width}}, grid, margin_fraction);
}

SpeedField make_constant_speed(double c0, const Grid2D& grid, double margin_fraction) {
    if (c0 != 1.0 && margin_fraction > 0.0)
        throw std::invalid_argument("make_constant_speed: background speed must be 1 when a "
                                    "margin band is required");
    ScalarField2D f(grid, FieldKind::Real);
    std::fill(f.data().begin(), f.data().end(), c0);
    return SpeedField(std::move(f), margin_fraction);
}

} // namespace tat
