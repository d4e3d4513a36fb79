#pragma once

#include <cmath>
#include <vector>

#include "strot/errors.hpp"
#include "strot/field.hpp"
#include "strot/transforms.hpp"

namespace strot {

namespace detail {

inline void check_exponent(double q) {
    if (!(q > 1.0) || !std::isfinite(q))
        throw ConfigError("L^q norm: exponent must be finite and > 1");
}

/// |u(x)|^q summed over one spatial slice, |u| the Euclidean magnitude
/// across components, times the cell volume (plain Riemann quadrature).
inline double slice_abs_pow_sum(const cdouble* slice, std::size_t n_points, int ncomp, double q) {
    double acc = 0.0;
    for (std::size_t p = 0; p < n_points; ++p) {
        double mag2 = 0.0;
        for (int c = 0; c < ncomp; ++c) {
            const cdouble z = slice[p * ncomp + c];
            mag2 += z.real() * z.real() + z.imag() * z.imag();
        }
        acc += std::pow(mag2, 0.5 * q);
    }
    return acc;
}

}  // namespace detail

/// Spatial L^q norm of one slice buffer: ((L/N)^3 Σ_x |u|^q)^{1/q}.
inline double spatial_lq_norm(const cdouble* slice, const GridSpec& g, int ncomp, double q) {
    detail::check_exponent(q);
    const double sum = detail::slice_abs_pow_sum(slice, g.points_per_slice(), ncomp, q);
    return std::pow(g.cell_volume() * sum, 1.0 / q);
}

/// Space-time L^q norm: ((1/n_time) Σ_t (L/N)^3 Σ_x |u|^q)^{1/q}.
/// The temporal sum carries the normalized Haar weight 1/n_time.
inline double lq_norm(const PhysicalField& f, double q) {
    detail::check_exponent(q);
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int m = 0; m < g.n_time; ++m)
        acc += detail::slice_abs_pow_sum(f.slice(m), g.points_per_slice(), f.n_components(), q);
    return std::pow(g.cell_volume() * acc / g.n_time, 1.0 / q);
}

/// Per-time-slice spatial L^q norms.
inline std::vector<double> lq_norm_per_slice(const PhysicalField& f, double q) {
    detail::check_exponent(q);
    const GridSpec& g = f.grid();
    std::vector<double> out(g.n_time);
    for (int m = 0; m < g.n_time; ++m)
        out[m] = spatial_lq_norm(f.slice(m), g, f.n_components(), q);
    return out;
}

/// Mixed norm L^q(T; L^r(box)): ((1/n_time) Σ_t ‖u(t)‖_r^q)^{1/q}.
inline double mixed_lq_lr_norm(const PhysicalField& f, double q_time, double r_space) {
    detail::check_exponent(q_time);
    detail::check_exponent(r_space);
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int m = 0; m < g.n_time; ++m) {
        const double nr = spatial_lq_norm(f.slice(m), g, f.n_components(), r_space);
        acc += std::pow(nr, q_time);
    }
    return std::pow(acc / g.n_time, 1.0 / q_time);
}

/// A(T; L^q) norm of a mode series: Σ_k ‖u_k‖_{L^q(box)}.
inline double a_norm(const ModeSeries& series, double q) {
    detail::check_exponent(q);
    double acc = 0.0;
    for (const auto& slice : series.slices)
        acc += spatial_lq_norm(slice.data(), series.grid, series.n_components, q);
    return acc;
}

/// A(T; L^q) norm of a sampled field (temporal transform, then per-mode
/// spatial norms).
inline double a_norm(const PhysicalField& f, double q) {
    return a_norm(decompose_time(f), q);
}

/// Space-time L² norm evaluated on the coefficient side:
/// ‖u‖²_{L²(T×box)} = L³ Σ_{k,ξ} |c(k,ξ)|².
inline double l2_norm_from_coefficients(const SpectralField& f) {
    double acc = 0.0;
    for (const auto& z : f.data())
        acc += z.real() * z.real() + z.imag() * z.imag();
    return std::sqrt(f.grid().box_volume() * acc);
}

}  // namespace strot
