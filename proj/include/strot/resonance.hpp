#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strot/errors.hpp"
#include "strot/types.hpp"

namespace strot {

/// dist(s, ωZ) = min over integers l of |s - ωl|.
inline double dist_to_lattice(double s, double omega) {
    if (!(omega > 0.0)) throw ConfigError("dist_to_lattice: omega must be positive");
    return std::abs(std::remainder(s, omega));
}

/// Running infimum of |a| over nonzero a = (2π/T)j + ωk with |j|,|k| <= bound.
/// Values below the zero tolerance 1e-12·ω are treated as lattice zeros and
/// skipped. `stabilized` is false when the minimum still improved in the
/// second half of the search window, the numerical signature of an
/// incommensurable ratio (true infimum 0).
struct LatticeInfimum {
    double value = 0.0;
    bool stabilized = true;
    /// (search bound b, running minimum after scanning |j|,|k| <= b) at each
    /// improvement; strictly decreasing by construction.
    std::vector<std::pair<long long, double>> improvements;
};

inline LatticeInfimum d_omega_T(double period, double omega, long long bound) {
    if (!(period > 0.0) || !(omega > 0.0))
        throw ConfigError("d_omega_T: period and omega must be positive");
    if (bound < 1) throw ConfigError("d_omega_T: bound must be >= 1");

    const double base = kTwoPi / period;
    const double zero_tol = 1e-12 * omega;
    LatticeInfimum result;
    double best = std::numeric_limits<double>::infinity();
    long long last_improvement = 0;

    for (long long b = 1; b <= bound; ++b) {
        // new shell: points with max(|j|, |k|) == b
        for (long long j = -b; j <= b; ++j) {
            for (long long k = -b; k <= b; ++k) {
                if (std::max(std::llabs(j), std::llabs(k)) != b) continue;
                const double a = std::abs(base * j + omega * k);
                if (a <= zero_tol) continue;
                if (a < best) {
                    best = a;
                    last_improvement = b;
                    result.improvements.emplace_back(b, a);
                }
            }
        }
        // |j| = 0 or |k| = 0 shells start at b = 1 and cover the axes too
    }
    result.value = best;
    result.stabilized = last_improvement <= std::max<long long>(1, bound / 2);
    return result;
}

struct Rational {
    long long num = 0;
    long long den = 1;
};

/// Continued-fraction test of (2π/T)/ω ∈ Q. Commensurable when a convergent
/// p/q with modest denominator (q <= den_cap) matches the ratio to 1e-12
/// relative. The denominator cap is what separates a genuinely rational input
/// from an irrational one: every double is rational, and the convergents of
/// e.g. √2 dip below 1e-12 relative once q ~ 10^6, long before the expansion
/// of the floating-point value terminates. The deepest convergent found
/// within `depth` terms is reported either way.
struct Commensurability {
    bool commensurable = false;
    Rational approx{};
    double ratio = 0.0;
};

inline Commensurability is_commensurable(double period, double omega, int depth,
                                          long long den_cap = 10000) {
    if (!(period > 0.0) || !(omega > 0.0))
        throw ConfigError("is_commensurable: period and omega must be positive");
    if (depth < 1) throw ConfigError("is_commensurable: depth must be >= 1");

    Commensurability out;
    out.ratio = (kTwoPi / period) / omega;

    long double y = out.ratio;
    long long p_prev = 1, q_prev = 0;  // convergent h_{-1}/k_{-1}
    long long p = 0, q = 1;            // convergent h_{-2}/k_{-2} seeds recurrence
    long long best_p = 0, best_q = 1;

    for (int i = 0; i < depth; ++i) {
        const long long a = static_cast<long long>(std::floor(y));
        const long long p_new = a * p_prev + p;
        const long long q_new = a * q_prev + q;
        if (p_new < 0 || q_new <= 0) break;  // overflow guard
        p = p_prev; q = q_prev;
        p_prev = p_new; q_prev = q_new;
        best_p = p_new;
        best_q = q_new;

        const long double err =
            std::abs(static_cast<long double>(out.ratio) -
                     static_cast<long double>(p_new) / static_cast<long double>(q_new));
        if (q_new <= den_cap &&
            err <= 1e-12L * std::abs(static_cast<long double>(out.ratio))) {
            out.commensurable = true;
            break;
        }
        const long double frac = y - static_cast<long double>(a);
        if (frac <= 0.0L) {  // expansion terminated exactly
            out.commensurable = q_new <= den_cap;
            break;
        }
        y = 1.0L / frac;
    }
    out.approx = {best_p, best_q};
    return out;
}

/// One essential-spectrum half-line {α + iωl : alpha_min <= α <= 0}.
struct SpectrumLine {
    long long ell = 0;
    double imag_offset = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
};

inline std::vector<SpectrumLine> spectrum_lattice(double omega, long long ell_min,
                                                  long long ell_max, double alpha_min) {
    if (!(omega > 0.0)) throw ConfigError("spectrum_lattice: omega must be positive");
    if (ell_min > ell_max) throw ConfigError("spectrum_lattice: empty ell range");
    if (!(alpha_min <= 0.0)) throw ConfigError("spectrum_lattice: alpha_min must be <= 0");
    std::vector<SpectrumLine> lines;
    for (long long l = ell_min; l <= ell_max; ++l)
        lines.push_back({l, omega * l, alpha_min, 0.0});
    return lines;
}

/// Aggregated resonance-lattice arithmetic for a configuration (s, ω, T).
struct ResonanceReport {
    double s = 0.0;
    double omega = 0.0;
    double period = 0.0;
    double dist_value = 0.0;
    double d_omega_T = 0.0;
    bool d_stabilized = true;
    bool commensurable = false;
    std::optional<Rational> rational_approx;
    std::vector<int> a1_indices;
    std::vector<int> a2_indices;
    std::vector<SpectrumLine> spectrum_lines;
};

/// Builds the report: dist(s, ωZ), d_{ω,T} by bounded search, the
/// commensurability verdict, the A1/A2 split of |k| <= K (A1 = indices with
/// (2π/T)k on the lattice ωZ up to 1e-10·ω), and the spectrum lines.
inline ResonanceReport resonance_report(double s, double omega, double period, int K,
                                        long long bound, int depth, double alpha_min = -1.0) {
    ResonanceReport r;
    r.s = s;
    r.omega = omega;
    r.period = period;
    r.dist_value = dist_to_lattice(s, omega);
    const auto inf = d_omega_T(period, omega, bound);
    r.d_omega_T = inf.value;
    r.d_stabilized = inf.stabilized;
    const auto comm = is_commensurable(period, omega, depth);
    r.commensurable = comm.commensurable;
    if (comm.commensurable) r.rational_approx = comm.approx;

    const double tol = 1e-10 * omega;
    for (int k = -K; k <= K; ++k) {
        if (dist_to_lattice(kTwoPi / period * k, omega) <= tol)
            r.a1_indices.push_back(k);
        else
            r.a2_indices.push_back(k);
    }
    r.spectrum_lines = spectrum_lattice(omega, -std::max(1, K / 2), std::max(1, K / 2), alpha_min);
    return r;
}

inline nlohmann::json to_json(const ResonanceReport& r) {
    nlohmann::json j{{"s", r.s},
                     {"omega", r.omega},
                     {"period", r.period},
                     {"dist_value", r.dist_value},
                     {"d_omega_T", r.d_omega_T},
                     {"d_stabilized", r.d_stabilized},
                     {"commensurable", r.commensurable},
                     {"a1_indices", r.a1_indices},
                     {"a2_indices", r.a2_indices},
                     {"tolerances", {{"lattice_zero", "1e-12*omega"},
                                     {"rational_match", "1e-12 relative"},
                                     {"a1_membership", "1e-10*omega"}}}};
    if (r.rational_approx)
        j["rational_approx"] = {{"num", r.rational_approx->num}, {"den", r.rational_approx->den}};
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : r.spectrum_lines)
        lines.push_back({{"ell", l.ell},
                         {"imag_offset", l.imag_offset},
                         {"alpha_min", l.alpha_min},
                         {"alpha_max", l.alpha_max}});
    j["spectrum_lines"] = lines;
    return j;
}

}  // namespace strot
