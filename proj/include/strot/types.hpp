#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace strot {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

using Vec3 = std::array<double, 3>;
using Vec3c = std::array<cdouble, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat3c = std::array<std::array<cdouble, 3>, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline cdouble dot(const Vec3& a, const Vec3c& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Vec3& a) { return dot(a, a); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// e1 ∧ v, the angular-velocity wedge used by the rotation terms.
template <typename T>
std::array<T, 3> e1_wedge(const std::array<T, 3>& v) {
    return {T{0} - T{0}, -v[2], v[1]};
}

inline Mat3 identity3() {
    return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
}

inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

inline Vec3c mat_vec(const Mat3& m, const Vec3c& v) {
    Vec3c r{};
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = m[j][i];
    return r;
}

}  // namespace strot
