#pragma once

#include <complex>
#include <mutex>

#include <fftw3.h>

namespace strot::detail {

// FFTW's planner is not thread-safe; executes are.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// Unnormalized in-place complex-to-complex DFT batch.
/// `n` lists the transform dimensions (row-major, slowest first); the batch of
/// `howmany` transforms is addressed with `stride` between consecutive
/// elements of one transform and `dist` between transforms.
/// sign: FFTW_FORWARD (-1) or FFTW_BACKWARD (+1).
inline void dft_inplace(std::complex<double>* data, int rank, const int* n,
                        int howmany, int stride, int dist, int sign) {
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_plan plan = nullptr;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_many_dft(rank, n, howmany, raw, nullptr, stride, dist,
                                  raw, nullptr, stride, dist, sign,
                                  FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace strot::detail
