#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace frontlab {

/// Uniform 1-d grid in absolute coordinates. Node i sits at x_left + i*dx.
struct Grid1D {
    double x_left = 0.0;
    double dx = 1.0;
    std::size_t n = 0;

    Grid1D() = default;
    Grid1D(double x_left_, double dx_, std::size_t n_)
        : x_left(x_left_), dx(dx_), n(n_) {
        if (!(dx > 0.0)) throw std::invalid_argument("Grid1D: dx must be > 0");
        if (n < 3) throw std::invalid_argument("Grid1D: need at least 3 nodes");
    }

    double x(std::size_t i) const { return x_left + static_cast<double>(i) * dx; }
    double x_right() const { return x(n - 1); }
    double center() const { return 0.5 * (x_left + x_right()); }
    double width() const { return static_cast<double>(n - 1) * dx; }
};

/// Field values on a grid at one instant. Values live in [0, 1]; clamp()
/// enforces the invariant and reports how far the raw data overshot it.
struct FieldState {
    Grid1D grid;
    std::vector<double> values;
    double time = 0.0;

    FieldState() = default;
    FieldState(Grid1D g, std::vector<double> v, double t);

    /// Clips values to [0, 1] and returns the largest pre-clip overshoot.
    double clamp();

    /// Linear interpolation in absolute coordinates; clamps to the window.
    double interpolate(double x) const;
};

/// Builds a state by sampling fn(x) on the grid and clamping to [0, 1].
FieldState sample_field(const Grid1D& grid, double time,
                        const std::function<double(double)>& fn);

}  // namespace frontlab
