#pragma once

#include <stdexcept>

namespace wwave {

/// Uniform grid on [-x_max, x_max], symmetric about 0 with an odd node count
/// so that x = 0 is a node. Node i sits at -x_max + i*dx.
class Grid1D {
public:
    Grid1D(double x_max, int nx) : x_max_(x_max), nx_(nx) {
        if (nx < 3) throw std::invalid_argument("Grid1D: nx must be >= 3");
        if (nx % 2 == 0) throw std::invalid_argument("Grid1D: nx must be odd (node at x = 0)");
        if (!(x_max > 0)) throw std::invalid_argument("Grid1D: x_max must be positive");
    }

    /// Smallest symmetric grid with spacing exactly `dx` covering [-half_width, half_width].
    static Grid1D with_spacing(double half_width, double dx) {
        if (!(dx > 0) || !(half_width > 0))
            throw std::invalid_argument("Grid1D::with_spacing: arguments must be positive");
        int n_half = static_cast<int>(half_width / dx);
        while (n_half * dx < half_width) ++n_half;
        return Grid1D(n_half * dx, 2 * n_half + 1);
    }

    double x_min() const { return -x_max_; }
    double x_max() const { return x_max_; }
    int nx() const { return nx_; }
    double dx() const { return 2.0 * x_max_ / (nx_ - 1); }
    double node(int i) const { return -x_max_ + i * dx(); }
    int center_index() const { return (nx_ - 1) / 2; }

private:
    double x_max_;
    int nx_;
};

}  // namespace wwave
