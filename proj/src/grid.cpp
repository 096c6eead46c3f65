#include "tat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tat {

Grid2D::Grid2D(int nx_, int ny_, double x_min_, double x_max_, double y_min_, double y_max_)
    : nx(nx_), ny(ny_), x_min(x_min_), x_max(x_max_), y_min(y_min_), y_max(y_max_) {
    if (nx < 16 || ny < 16)
        throw std::invalid_argument("Grid2D: nx, ny must be >= 16 (got " + std::to_string(nx) +
                                    " x " + std::to_string(ny) + ")");
    if (!(x_max > x_min) || !(y_max > y_min))
        throw std::invalid_argument("Grid2D: degenerate extents");
}

Grid2D Grid2D::centered_square(int n, double side) {
    return Grid2D(n, n, -side / 2, side / 2, -side / 2, side / 2);
}

ScalarField2D::ScalarField2D(const Grid2D& grid, FieldKind kind)
    : grid_(grid), kind_(kind), stride_(kind == FieldKind::Complex ? 2 : 1),
      data_(grid.size() * stride_, 0.0) {}

double ScalarField2D::sample_re(const Vec2& p) const {
    const double fx = std::clamp((p.x - grid_.x_min) / grid_.dx(), 0.0, double(grid_.nx - 1));
    const double fy = std::clamp((p.y - grid_.y_min) / grid_.dy(), 0.0, double(grid_.ny - 1));
    const int ix = std::min(static_cast<int>(fx), grid_.nx - 2);
    const int iy = std::min(static_cast<int>(fy), grid_.ny - 2);
    const double tx = fx - ix;
    const double ty = fy - iy;
    return (1 - tx) * (1 - ty) * re(ix, iy) + tx * (1 - ty) * re(ix + 1, iy) +
           (1 - tx) * ty * re(ix, iy + 1) + tx * ty * re(ix + 1, iy + 1);
}

double ScalarField2D::max_abs() const {
    double m = 0.0;
    if (kind_ == FieldKind::Real) {
        for (double v : data_) m = std::max(m, std::abs(v));
    } else {
        for (std::size_t i = 0; i + 1 < data_.size(); i += 2)
            m = std::max(m, std::hypot(data_[i], data_[i + 1]));
    }
    return m;
}

double ScalarField2D::l2_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s * grid_.dx() * grid_.dy());
}

void ScalarField2D::check_finite(const char* context) const {
    for (double v : data_)
        if (!std::isfinite(v))
            throw std::runtime_error(std::string(context) + ": non-finite field value");
}

void ScalarField2D::truncate_below(double threshold) {
    const double cut = threshold * max_abs();
    if (kind_ == FieldKind::Real) {
        for (double& v : data_)
            if (std::abs(v) < cut) v = 0.0;
    } else {
        for (std::size_t i = 0; i + 1 < data_.size(); i += 2) {
            if (std::hypot(data_[i], data_[i + 1]) < cut) {
                data_[i] = 0.0;
                data_[i + 1] = 0.0;
            }
        }
    }
}

ScalarField2D real_part(const ScalarField2D& f) {
    if (f.is_real()) return f;
    ScalarField2D out(f.grid(), FieldKind::Real);
    for (int iy = 0; iy < f.grid().ny; ++iy)
        for (int ix = 0; ix < f.grid().nx; ++ix) out.re(ix, iy) = f.re(ix, iy);
    return out;
}

} // namespace tat
