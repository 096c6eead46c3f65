#ifndef TAT_GRID_HPP
#define TAT_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "tat/vec2.hpp"

namespace tat {

// Uniform node-centered 2D grid. Nodes sit at x_min + i*dx, i = 0..nx-1,
// with dx = (x_max - x_min)/(nx - 1); same along y. Values attached to the
// grid are stored row-major: index(ix, iy) = iy*nx + ix.
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double x_min_, double x_max_, double y_min_, double y_max_);

    // Centered square grid helper: n x n nodes spanning [-side/2, side/2]^2.
    static Grid2D centered_square(int n, double side);

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dy() const { return (y_max - y_min) / (ny - 1); }
    double x(int ix) const { return x_min + ix * dx(); }
    double y(int iy) const { return y_min + iy * dy(); }
    std::size_t index(int ix, int iy) const { return static_cast<std::size_t>(iy) * nx + ix; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    bool contains(const Vec2& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    bool operator==(const Grid2D& o) const = default;
};

enum class FieldKind { Real, Complex };

// Function sampled on a Grid2D. Real fields store nx*ny doubles; complex
// fields store 2*nx*ny doubles interleaved (re, im), matching the on-disk
// layout of the TATF dump.
class ScalarField2D {
  public:
    ScalarField2D() = default;
    ScalarField2D(const Grid2D& grid, FieldKind kind);

    const Grid2D& grid() const { return grid_; }
    FieldKind kind() const { return kind_; }
    bool is_real() const { return kind_ == FieldKind::Real; }

    double& re(int ix, int iy) { return data_[stride_ * grid_.index(ix, iy)]; }
    double re(int ix, int iy) const { return data_[stride_ * grid_.index(ix, iy)]; }
    double& im(int ix, int iy) { return data_[stride_ * grid_.index(ix, iy) + 1]; }
    double im(int ix, int iy) const {
        return kind_ == FieldKind::Complex ? data_[stride_ * grid_.index(ix, iy) + 1] : 0.0;
    }
    std::complex<double> value(int ix, int iy) const { return {re(ix, iy), im(ix, iy)}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    // Bilinear interpolation of the real part; clamps to the grid hull.
    double sample_re(const Vec2& p) const;

    double max_abs() const;
    double l2_norm() const; // sqrt(sum |v|^2 dx dy)

    // Throws if any stored value is non-finite.
    void check_finite(const char* context) const;

    // Hard support cutoff: zero every node whose magnitude falls below
    // threshold * max_abs().
    void truncate_below(double threshold);

  private:
    Grid2D grid_;
    FieldKind kind_ = FieldKind::Real;
    int stride_ = 1;
    std::vector<double> data_;
};

// Real part of a (possibly complex) field, e.g. to turn a coherent state
// into wave-equation initial data.
ScalarField2D real_part(const ScalarField2D& f);

} // namespace tat

#endif
