#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <complex>

#include "slope52/dd.hpp"
#include "slope52/errors.hpp"

namespace slope52 {

template <class Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using Mat2d = Mat2<double>;
using Mat2c = Mat2<std::complex<double>>;
using Complex = std::complex<double>;

/// Default tolerance for determinant / structure checks.
inline constexpr double kDetTol = 1e-9;

template <class Scalar>
Scalar det2(const Mat2<Scalar>& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Adjugate inverse with the computed determinant (det 1 is never assumed).
template <class Scalar>
Mat2<Scalar> adjugate_inverse(const Mat2<Scalar>& m) {
    const Scalar det = det2(m);
    Mat2<Scalar> inv;
    inv << m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det;
    return inv;
}

namespace detail {
inline double abs_as_double(double v) { return std::abs(v); }
inline double abs_as_double(long double v) { return static_cast<double>(std::abs(v)); }
inline double abs_as_double(const Complex& v) { return std::abs(v); }
inline double abs_as_double(DoubleDouble v) { return std::abs(to_double(v)); }
}  // namespace detail

/// Max-entry magnitude, the comparison norm used throughout.
template <class Scalar>
double max_abs(const Mat2<Scalar>& m) {
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = std::max(r, detail::abs_as_double(m(i, j)));
    return r;
}

template <class Scalar>
double max_abs_diff(const Mat2<Scalar>& a, const Mat2<Scalar>& b) {
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = std::max(r, detail::abs_as_double(Scalar(a(i, j) - b(i, j))));
    return r;
}

/// Max-entry difference, normalized by the larger entry scale once entries
/// exceed 1 in magnitude (entries of word products grow like powers of t).
template <class Scalar>
double relative_residual(const Mat2<Scalar>& a, const Mat2<Scalar>& b) {
    return max_abs_diff(a, b) / std::max(1.0, std::max(max_abs(a), max_abs(b)));
}

template <class Scalar>
bool is_unimodular(const Mat2<Scalar>& m, double tol = kDetTol) {
    return detail::abs_as_double(Scalar(det2(m) - Scalar(1))) <= tol;
}

inline Mat2d to_double_matrix(const Mat2<DoubleDouble>& m) {
    Mat2d r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = to_double(m(i, j));
    return r;
}

}  // namespace slope52
