#pragma once

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "strot/errors.hpp"
#include "strot/fft.hpp"
#include "strot/field.hpp"

namespace strot {

namespace detail {

// The spatial samples sit at x = -L/2 + n·L/N, so the plain DFT acquires the
// phase e^{iξ·L/2} = (-1)^{s1+s2+s3} per coefficient. Applying the sign flip
// after a forward (or before a backward) transform keeps the pair exact.
inline void apply_centered_signs(std::vector<cdouble>& data, const GridSpec& g, int ncomp) {
    const int nt = g.n_time, n = g.n_space;
    std::size_t idx = 0;
    for (int a = 0; a < nt; ++a) {
        for (int i1 = 0; i1 < n; ++i1) {
            const int s1 = g.signed_space_mode(i1);
            for (int i2 = 0; i2 < n; ++i2) {
                const int s2 = g.signed_space_mode(i2);
                for (int i3 = 0; i3 < n; ++i3) {
                    const int s3 = g.signed_space_mode(i3);
                    if (((s1 + s2 + s3) & 1) != 0) {
                        for (int c = 0; c < ncomp; ++c) data[idx + c] = -data[idx + c];
                    }
                    idx += ncomp;
                }
            }
        }
    }
}

inline void scale(std::vector<cdouble>& data, double factor) {
    for (auto& z : data) z *= factor;
}

}  // namespace detail

/// Forward transform: physical samples -> expansion coefficients c(k, ξ).
/// Temporal part is the mean over one period (normalized Haar measure);
/// spatial part is the (L/N)^3-weighted discrete transform normalized by the
/// box volume, i.e. c(k,ξ) are the coefficients of Σ c·e^{i(ξ·x + (2π/T)kt)}.
inline SpectralField to_spectral(const PhysicalField& f) {
    const GridSpec& g = f.grid();
    SpectralField out(g, f.n_components());
    out.data() = f.data();
    const int n[4] = {g.n_time, g.n_space, g.n_space, g.n_space};
    detail::dft_inplace(out.data().data(), 4, n, f.n_components(), f.n_components(), 1,
                        FFTW_FORWARD);
    detail::scale(out.data(), 1.0 / (static_cast<double>(g.n_time) * g.points_per_slice()));
    detail::apply_centered_signs(out.data(), g, f.n_components());
    return out;
}

/// Inverse of to_spectral.
inline PhysicalField to_physical(const SpectralField& f) {
    const GridSpec& g = f.grid();
    PhysicalField out(g, f.n_components());
    out.data() = f.data();
    detail::apply_centered_signs(out.data(), g, f.n_components());
    const int n[4] = {g.n_time, g.n_space, g.n_space, g.n_space};
    detail::dft_inplace(out.data().data(), 4, n, f.n_components(), f.n_components(), 1,
                        FFTW_BACKWARD);
    return out;
}

enum class Derivative { time, grad, div, laplacian };

/// Coefficient-wise differentiation by the exact discrete symbols
/// i(2π/T)k, iξ, iξ·, -|ξ|². The Nyquist mode -N/2 (resp. -n_time/2) is
/// zeroed for odd-order symbols along the differentiated axis.
/// grad of a vector returns the 9-component Jacobian stack with component
/// index 3·c + j holding ∂_j u_c.
inline SpectralField spectral_derivative(const SpectralField& f, Derivative which) {
    const GridSpec& g = f.grid();
    const int ncomp = f.n_components();
    const int nt = g.n_time, n = g.n_space;

    if (which == Derivative::div && ncomp != 3)
        throw ShapeError("spectral_derivative(div): vector field required");
    if (which == Derivative::grad && ncomp != 1 && ncomp != 3)
        throw ShapeError("spectral_derivative(grad): scalar or vector field required");

    const int out_comp = which == Derivative::grad ? 3 * ncomp
                         : which == Derivative::div ? 1
                                                    : ncomp;
    SpectralField out(g, out_comp);

    for (int a = 0; a < nt; ++a) {
        const int k = g.signed_time_mode(a);
        const bool t_nyq = (k == -nt / 2);
        const cdouble time_sym = t_nyq ? cdouble{0.0, 0.0}
                                       : cdouble{0.0, kTwoPi / g.period * k};
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    const int idx[3] = {i1, i2, i3};
                    Vec3 xi = g.xi(i1, i2, i3);
                    double xi2 = norm2(xi);
                    switch (which) {
                    case Derivative::time:
                        for (int c = 0; c < ncomp; ++c)
                            out.at(a, i1, i2, i3, c) = time_sym * f.at(a, i1, i2, i3, c);
                        break;
                    case Derivative::laplacian:
                        for (int c = 0; c < ncomp; ++c)
                            out.at(a, i1, i2, i3, c) = -xi2 * f.at(a, i1, i2, i3, c);
                        break;
                    case Derivative::grad:
                        for (int c = 0; c < ncomp; ++c)
                            for (int j = 0; j < 3; ++j) {
                                const bool nyq = idx[j] == n / 2;
                                out.at(a, i1, i2, i3, 3 * c + j) =
                                    nyq ? cdouble{0.0, 0.0}
                                        : cdouble{0.0, xi[j]} * f.at(a, i1, i2, i3, c);
                            }
                        break;
                    case Derivative::div: {
                        cdouble sum{0.0, 0.0};
                        for (int j = 0; j < 3; ++j) {
                            if (idx[j] == n / 2) continue;
                            sum += cdouble{0.0, xi[j]} * f.at(a, i1, i2, i3, j);
                        }
                        out.at(a, i1, i2, i3, 0) = sum;
                        break;
                    }
                    }
                }
    }
    return out;
}

/// Temporal transform per spatial point: the field as a series of spatial
/// slices over temporal modes, ordered k = -n_time/2 .. n_time/2 - 1.
inline ModeSeries decompose_time(const PhysicalField& f) {
    const GridSpec& g = f.grid();
    const std::size_t per_slice = g.points_per_slice() * f.n_components();

    std::vector<cdouble> work = f.data();
    const int n[1] = {g.n_time};
    detail::dft_inplace(work.data(), 1, n, static_cast<int>(per_slice),
                        static_cast<int>(per_slice), 1, FFTW_FORWARD);
    detail::scale(work, 1.0 / g.n_time);

    ModeSeries series;
    series.grid = g;
    series.n_components = f.n_components();
    for (int k = -g.n_time / 2; k < g.n_time / 2; ++k) {
        const int a = k >= 0 ? k : k + g.n_time;
        series.ks.push_back(k);
        series.slices.emplace_back(work.begin() + a * per_slice,
                                   work.begin() + (a + 1) * per_slice);
    }
    return series;
}

/// Evaluates Σ_m slices[m]·e^{i(2π/T) k_m t} on n_time_out uniform samples.
inline PhysicalField synthesize(const ModeSeries& series, int n_time_out) {
    GridSpec g = series.grid;
    g.n_time = n_time_out;
    g.validate();
    PhysicalField out(g, series.n_components);
    const std::size_t per_slice = series.slice_size();
    for (int m = 0; m < n_time_out; ++m) {
        const double t = g.time(m);
        cdouble* dst = out.slice(m);
        for (std::size_t s = 0; s < series.ks.size(); ++s) {
            const double phase = kTwoPi / g.period * series.ks[s] * t;
            const cdouble w = std::polar(1.0, phase);
            const cdouble* src = series.slices[s].data();
            for (std::size_t i = 0; i < per_slice; ++i) dst[i] += w * src[i];
        }
    }
    return out;
}

/// max |ξ·c(k,ξ)| / max |c|, the discrete divergence-free defect of a
/// coefficient field (0/0 counts as 0).
inline double max_divergence_ratio(const SpectralField& f) {
    if (f.n_components() != 3) throw ShapeError("divergence check needs a vector field");
    const GridSpec& g = f.grid();
    double worst = 0.0;
    for (int a = 0; a < g.n_time; ++a)
        for (int i1 = 0; i1 < g.n_space; ++i1)
            for (int i2 = 0; i2 < g.n_space; ++i2)
                for (int i3 = 0; i3 < g.n_space; ++i3) {
                    Vec3 xi = g.xi(i1, i2, i3);
                    cdouble d = xi[0] * f.at(a, i1, i2, i3, 0) +
                                xi[1] * f.at(a, i1, i2, i3, 1) +
                                xi[2] * f.at(a, i1, i2, i3, 2);
                    worst = std::max(worst, std::abs(d));
                }
    const double peak = max_abs(f);
    return peak > 0.0 ? worst / peak : 0.0;
}

inline bool is_divergence_free(const SpectralField& f, double tol = 1e-12) {
    return max_divergence_ratio(f) <= tol;
}

}  // namespace strot
