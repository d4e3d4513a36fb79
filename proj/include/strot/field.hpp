#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <vector>

#include "strot/errors.hpp"
#include "strot/types.hpp"

namespace strot {

/// Discretization of the time circle × periodic box.
///
/// Time samples live at t_m = m·period/n_time, m = 0..n_time-1; temporal
/// frequencies are (2π/period)·k with k in the signed range
/// {-n_time/2, ..., n_time/2 - 1}. Spatial samples live at
/// x_i = -L/2 + i·L/N on the cube [-L/2, L/2)^3 and wavenumbers are
/// ξ = (2π/L)·s with s in {-N/2, ..., N/2 - 1} per axis. Array storage uses
/// the usual DFT index order (0, 1, ..., n/2-1, -n/2, ..., -1).
struct GridSpec {
    double period = kTwoPi;  ///< time period (T)
    double box_len = kTwoPi; ///< side length L of the periodic cube
    int n_space = 8;         ///< points per spatial axis (N), even, >= 4
    int n_time = 8;          ///< samples per period, even, >= 2

    void validate() const {
        if (!(period > 0.0) || !(box_len > 0.0))
            throw ConfigError("GridSpec: period and box_len must be positive");
        if (n_space < 4 || n_space % 2 != 0)
            throw ConfigError("GridSpec: n_space must be even and >= 4");
        if (n_time < 2 || n_time % 2 != 0)
            throw ConfigError("GridSpec: n_time must be even and >= 2");
    }

    /// Grid whose internal clock matches an angular velocity: period = 2π/ω.
    static GridSpec for_omega(double omega, int n_space, int n_time, double box_len) {
        if (!(omega > 0.0)) throw ConfigError("GridSpec::for_omega: omega must be positive");
        GridSpec g{kTwoPi / omega, box_len, n_space, n_time};
        g.validate();
        return g;
    }

    int signed_time_mode(int idx) const { return idx < n_time / 2 ? idx : idx - n_time; }
    int signed_space_mode(int idx) const { return idx < n_space / 2 ? idx : idx - n_space; }

    /// Storage index of a signed temporal mode k in [-n_time/2, n_time/2).
    int time_index_of_mode(int k) const {
        if (k < -n_time / 2 || k >= n_time / 2)
            throw ShapeError("temporal mode out of grid range");
        return k >= 0 ? k : k + n_time;
    }

    double temporal_frequency(int idx) const {
        return kTwoPi / period * signed_time_mode(idx);
    }
    double xi_axis(int idx) const { return kTwoPi / box_len * signed_space_mode(idx); }
    Vec3 xi(int i1, int i2, int i3) const { return {xi_axis(i1), xi_axis(i2), xi_axis(i3)}; }

    double coord(int idx) const { return -0.5 * box_len + box_len * idx / n_space; }
    double time(int m) const { return period * m / n_time; }

    double spacing() const { return box_len / n_space; }
    double cell_volume() const { const double h = spacing(); return h * h * h; }
    double box_volume() const { return box_len * box_len * box_len; }

    std::size_t points_per_slice() const {
        return static_cast<std::size_t>(n_space) * n_space * n_space;
    }

    bool operator==(const GridSpec& o) const {
        return period == o.period && box_len == o.box_len &&
               n_space == o.n_space && n_time == o.n_time;
    }
};

namespace detail {

inline void check_components(int n) {
    // 9 components hold Jacobian stacks produced by spectral_derivative(grad)
    // on vector fields; user-facing fields are scalars (1) or vectors (3).
    if (n != 1 && n != 3 && n != 9)
        throw ShapeError("field n_components must be 1, 3, or 9");
}

class FieldStorage {
public:
    FieldStorage() = default;
    FieldStorage(const GridSpec& grid, int n_components)
        : grid_(grid), n_components_(n_components),
          data_(static_cast<std::size_t>(grid.n_time) * grid.points_per_slice() * n_components) {
        grid_.validate();
        check_components(n_components);
    }

    const GridSpec& grid() const { return grid_; }
    int n_components() const { return n_components_; }
    std::size_t size() const { return data_.size(); }
    std::vector<cdouble>& data() { return data_; }
    const std::vector<cdouble>& data() const { return data_; }

    std::size_t index(int a, int i1, int i2, int i3, int c) const {
        const int n = grid_.n_space;
        return (((static_cast<std::size_t>(a) * n + i1) * n + i2) * n + i3) * n_components_ + c;
    }

    cdouble& at(int a, int i1, int i2, int i3, int c) { return data_[index(a, i1, i2, i3, c)]; }
    const cdouble& at(int a, int i1, int i2, int i3, int c) const {
        return data_[index(a, i1, i2, i3, c)];
    }

    cdouble* slice(int a) {
        return data_.data() + static_cast<std::size_t>(a) * grid_.points_per_slice() * n_components_;
    }
    const cdouble* slice(int a) const {
        return data_.data() + static_cast<std::size_t>(a) * grid_.points_per_slice() * n_components_;
    }

protected:
    GridSpec grid_{};
    int n_components_ = 1;
    std::vector<cdouble> data_;
};

}  // namespace detail

/// Space-time samples u(t_m, x) on the time circle × box grid.
/// Index order: (time, x1, x2, x3, component).
class PhysicalField : public detail::FieldStorage {
public:
    PhysicalField() = default;
    PhysicalField(const GridSpec& grid, int n_components)
        : detail::FieldStorage(grid, n_components) {}
};

/// Fourier expansion coefficients c(k, ξ) with
///   u(t, x) = Σ_{k,ξ} c(k,ξ) e^{i(ξ·x + (2π/T) k t)}.
/// Index order: (k, ξ1, ξ2, ξ3, component), DFT index layout per axis.
class SpectralField : public detail::FieldStorage {
public:
    SpectralField() = default;
    SpectralField(const GridSpec& grid, int n_components)
        : detail::FieldStorage(grid, n_components) {}
};

inline void require_same_shape(const detail::FieldStorage& a, const detail::FieldStorage& b,
                               const char* what) {
    if (!(a.grid() == b.grid()) || a.n_components() != b.n_components()) {
        std::ostringstream oss;
        oss << what << ": field shapes differ";
        throw ShapeError(oss.str());
    }
}

/// Hybrid representation: spectral in time, physical in space.
/// slices[m] holds the spatial samples of temporal mode ks[m]; the field is
/// Σ_m slices[m](x) · e^{i(2π/T) ks[m] t}.
struct ModeSeries {
    GridSpec grid{};
    int n_components = 1;
    std::vector<int> ks;
    std::vector<std::vector<cdouble>> slices;

    std::size_t slice_size() const {
        return grid.points_per_slice() * static_cast<std::size_t>(n_components);
    }
    int find(int k) const {
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (ks[i] == k) return static_cast<int>(i);
        return -1;
    }
};

inline double max_abs(const std::vector<cdouble>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

inline double max_abs(const detail::FieldStorage& f) { return max_abs(f.data()); }

}  // namespace strot
