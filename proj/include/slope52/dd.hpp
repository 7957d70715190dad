#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>

namespace slope52 {

/// Compensated double-double scalar (~106-bit significand).
///
/// The longitude word runs through intermediate matrix entries up to ~t^2.5
/// while its off-diagonal entries cancel to zero, so plain binary64 (and even
/// 80-bit long double) cannot reach the advertised relative tolerances at the
/// ends of the s-grid.  Error-free transforms (two_sum / fma product) give a
/// portable 2^-104 unit roundoff, which is far more than enough.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double v) : hi(v), lo(0.0) {}  // NOLINT(google-explicit-constructor)
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

// |a| >= |b| assumed.
inline DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = detail::two_sum(a.hi, b.hi);
    const DoubleDouble t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - DoubleDouble(q1) * b;
    const double q2 = r.hi / b.hi;
    r = r - DoubleDouble(q2) * b;
    const double q3 = r.hi / b.hi;
    DoubleDouble q = detail::quick_two_sum(q1, q2);
    return q + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, DoubleDouble b) { return a = a / b; }

inline bool operator==(DoubleDouble a, DoubleDouble b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DoubleDouble a, DoubleDouble b) { return !(a == b); }
inline bool operator<(DoubleDouble a, DoubleDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DoubleDouble a, DoubleDouble b) { return b < a; }
inline bool operator<=(DoubleDouble a, DoubleDouble b) { return !(b < a); }
inline bool operator>=(DoubleDouble a, DoubleDouble b) { return !(a < b); }

inline double to_double(DoubleDouble a) { return a.hi + a.lo; }

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

/// One dd-Newton step on a double seed; accurate to the dd roundoff.
inline DoubleDouble sqrt(DoubleDouble a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {};
    const double approx = std::sqrt(a.hi);
    const DoubleDouble y(approx);
    return (y + a / y) * DoubleDouble(0.5);
}

}  // namespace slope52

namespace Eigen {

template <>
struct NumTraits<slope52::DoubleDouble> : GenericNumTraits<slope52::DoubleDouble> {
    typedef slope52::DoubleDouble Real;
    typedef slope52::DoubleDouble NonInteger;
    typedef slope52::DoubleDouble Nested;
    typedef slope52::DoubleDouble Literal;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 12,
    };

    static inline Real epsilon() { return {4.93038065763132e-32, 0.0}; }  // 2^-104
    static inline Real dummy_precision() { return {1e-28, 0.0}; }
    static inline Real highest() { return {std::numeric_limits<double>::max(), 0.0}; }
    static inline Real lowest() { return {-std::numeric_limits<double>::max(), 0.0}; }
    static inline int digits10() { return 31; }
};

}  // namespace Eigen
