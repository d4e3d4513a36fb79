#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "strot/errors.hpp"
#include "strot/types.hpp"

namespace strot {

/// A point of the (temporal frequency, spatial wavenumber) dual space
/// together with the resolvent parameter s and angular velocity ω.
/// k is the temporal frequency index; it is real-valued so the same point
/// type serves the extended symbols at non-integer η.
struct FreqPoint {
    double k = 0.0;
    Vec3 xi{0.0, 0.0, 0.0};
    double s = 0.0;
    double omega = 1.0;
};

/// D_s(k, ξ) = i s + i ω k + |ξ|², the common denominator of the m-family.
/// Vanishes exactly when ξ = 0 and s + ωk = 0 (the resonance lattice).
inline cdouble eval_D(const FreqPoint& p) {
    return {norm2(p.xi), p.s + p.omega * p.k};
}

inline bool is_resonant(const FreqPoint& p) {
    return norm2(p.xi) == 0.0 && p.s + p.omega * p.k == 0.0;
}

/// Velocity and derivative multipliers of the auxiliary problem:
///   m = 1/D,  m0 = is/D,  m1 = iωk/D,  m_{jl} = -ξ_j ξ_l / D.
/// At a resonant point D = 0 the entries are unusable and flagged instead.
struct SymbolBundle {
    cdouble D{};
    cdouble m{};
    cdouble m0{};
    cdouble m1{};
    Mat3c mjl{};
    bool resonant = false;
};

inline SymbolBundle eval_m_family(const FreqPoint& p) {
    SymbolBundle b;
    b.D = eval_D(p);
    if (b.D == cdouble{0.0, 0.0}) {
        b.resonant = true;
        return b;
    }
    b.m = 1.0 / b.D;
    b.m0 = cdouble{0.0, p.s} * b.m;
    b.m1 = cdouble{0.0, p.omega * p.k} * b.m;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            b.mjl[j][l] = -p.xi[j] * p.xi[l] * b.m;
    return b;
}

/// Helmholtz/Leray projector symbol I - ξ⊗ξ/|ξ|². At ξ = 0 the identity is
/// returned: on the torus the mean mode is divergence-free and stays
/// unprojected.
inline Mat3 leray_symbol(const Vec3& xi) {
    Mat3 p = identity3();
    const double xi2 = norm2(xi);
    if (xi2 == 0.0) return p;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            p[j][l] -= xi[j] * xi[l] / xi2;
    return p;
}

/// Pressure symbols: 𝔭 = 𝓕⁻¹[(-iξ/|ξ|²)·𝓕f], ∇𝔭 = 𝓕⁻¹[(ξ⊗ξ/|ξ|²)𝓕f].
/// Both vanish at ξ = 0 (zero-mean pressure gauge).
struct PressureSymbols {
    Vec3c vec{};   // -iξ/|ξ|²
    Mat3 mat{};    // ξ⊗ξ/|ξ|²
};

inline PressureSymbols pressure_symbols(const Vec3& xi) {
    PressureSymbols ps{};
    const double xi2 = norm2(xi);
    if (xi2 == 0.0) return ps;
    for (int j = 0; j < 3; ++j) {
        ps.vec[j] = cdouble{0.0, -xi[j] / xi2};
        for (int l = 0; l < 3; ++l) ps.mat[j][l] = xi[j] * xi[l] / xi2;
    }
    return ps;
}

namespace detail {
inline double bump_h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
}

/// Smooth cutoff: 0 for |x| <= 1/2, 1 for |x| >= 1, C^∞ monotone between.
/// Concrete choice χ(x) = ψ(2|x| - 1), ψ(t) = h(t)/(h(t) + h(1-t)),
/// h(t) = e^{-1/t} for t > 0.
inline double cutoff_chi(double x) {
    const double t = 2.0 * std::abs(x) - 1.0;
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = detail::bump_h(t);
    const double b = detail::bump_h(1.0 - t);
    return a / (a + b);
}

/// Extended continuous symbols on ℝ×ℝ³ (defined for s ≠ 0):
///   M0 = is·χ(1 + ωη/s)/D_s,  M1 = iωη·χ(...)/D_s,  M_{jl} = ξ_jξ_l·χ(...)/D_s.
/// The cutoff kills the numerators near the lone zero (η, ξ) = (-s/ω, 0) of
/// D_s, so everything is finite. On the region |s + ωη| >= |s| the cutoff is
/// one and the restriction to integer η reproduces the m-family
/// (M_{jl} = -m_{jl} by the sign convention of the two definitions).
struct MFamily {
    cdouble M0{};
    cdouble M1{};
    Mat3c Mjl{};
    double chi = 0.0;
};

inline MFamily eval_M_family(double s, double omega, double eta, const Vec3& xi) {
    if (s == 0.0)
        throw ConfigError(
            "eval_M_family: extended symbols need s != 0; "
            "use the steady branch (time-mean split) for s = 0");
    MFamily f;
    f.chi = cutoff_chi(1.0 + omega * eta / s);
    if (f.chi == 0.0) return f;
    const cdouble D{norm2(xi), s + omega * eta};
    const cdouble inv = f.chi / D;
    f.M0 = cdouble{0.0, s} * inv;
    f.M1 = cdouble{0.0, omega * eta} * inv;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            f.Mjl[j][l] = xi[j] * xi[l] * inv;
    return f;
}

enum class ExtendedSymbol { M0, M1, Mjl };

inline cdouble eval_extended(ExtendedSymbol sym, int j, int l, double s, double omega,
                             double eta, const Vec3& xi) {
    const MFamily f = eval_M_family(s, omega, eta, xi);
    switch (sym) {
    case ExtendedSymbol::M0: return f.M0;
    case ExtendedSymbol::M1: return f.M1;
    case ExtendedSymbol::Mjl: return f.Mjl[j][l];
    }
    return {};
}

/// |η^α ξ^β ∂_η^α ∂_ξ^β M̃(η, ξ)| by nested central finite differences with
/// per-axis step h_i = 1e-5·(1 + |coordinate_i|). The derivative is computed
/// twice (steps h and h/2); `stable` records whether the two agree to 1e-4
/// relative, and `value` carries the Richardson extrapolation of the pair.
struct WeightedDerivative {
    double value = 0.0;
    bool stable = true;
    double coarse = 0.0;  // |weighted derivative| at step h
    double fine = 0.0;    // |weighted derivative| at step h/2
};

namespace detail {

template <typename F>
cdouble nested_central_diff(const F& f, std::array<double, 4> x,
                            const std::array<int, 4>& orders,
                            const std::array<double, 4>& steps, int axis) {
    if (axis == 4) return f(x);
    if (orders[axis] == 0) return nested_central_diff(f, x, orders, steps, axis + 1);
    std::array<double, 4> hi = x, lo = x;
    hi[axis] += steps[axis];
    lo[axis] -= steps[axis];
    const cdouble up = nested_central_diff(f, hi, orders, steps, axis + 1);
    const cdouble dn = nested_central_diff(f, lo, orders, steps, axis + 1);
    return (up - dn) / (2.0 * steps[axis]);
}

}  // namespace detail

inline WeightedDerivative weighted_derivative(ExtendedSymbol sym, int j, int l, double s,
                                              double omega, double eta, const Vec3& xi,
                                              int alpha, const std::array<int, 3>& beta) {
    if (alpha < 0 || alpha > 1 || beta[0] < 0 || beta[0] > 1 || beta[1] < 0 ||
        beta[1] > 1 || beta[2] < 0 || beta[2] > 1)
        throw ConfigError("weighted_derivative: derivative orders must be 0 or 1");

    const auto f = [&](const std::array<double, 4>& p) {
        return eval_extended(sym, j, l, s, omega, p[0], {p[1], p[2], p[3]});
    };

    double weight = alpha == 1 ? eta : 1.0;
    const double coords[3] = {xi[0], xi[1], xi[2]};
    for (int i = 0; i < 3; ++i)
        if (beta[i] == 1) weight *= coords[i];

    WeightedDerivative wd;
    if (weight == 0.0) return wd;

    const std::array<double, 4> x{eta, xi[0], xi[1], xi[2]};
    const std::array<int, 4> orders{alpha, beta[0], beta[1], beta[2]};
    std::array<double, 4> steps;
    for (int i = 0; i < 4; ++i) steps[i] = 1e-5 * (1.0 + std::abs(x[i]));

    const cdouble coarse = detail::nested_central_diff(f, x, orders, steps, 0);
    std::array<double, 4> half = steps;
    for (auto& h : half) h *= 0.5;
    const cdouble fine = detail::nested_central_diff(f, x, orders, half, 0);

    wd.coarse = std::abs(weight * coarse);
    wd.fine = std::abs(weight * fine);
    // central differences are O(h^2); one halving step extrapolates to O(h^4)
    wd.value = std::abs(weight * (4.0 * fine - coarse) / 3.0);

    const double scale = std::max(wd.fine, 1e-300);
    wd.stable = std::abs(wd.coarse - wd.fine) <= 1e-4 * scale ||
                (wd.coarse < 1e-14 && wd.fine < 1e-14);
    return wd;
}

}  // namespace strot
