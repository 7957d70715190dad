#pragma once

#include <cmath>
#include <stdexcept>

#include "slope52/matrix.hpp"
#include "slope52/word.hpp"

namespace slope52 {

namespace detail {
template <class S>
void require_positive(S s, const char* who) {
    if (!(s > S(0))) throw NonPositiveParameter(std::string(who) + ": parameter s must be positive");
}
inline void require_positive(DoubleDouble s, const char* who) {
    if (!(to_double(s) > 0.0)) throw NonPositiveParameter(std::string(who) + ": parameter s must be positive");
}
}  // namespace detail

/// T(s) = (2 + 3s + 2s^2 + sqrt(s^2+4)) / (2s); always > 4 for s > 0.
template <class S = double>
S param_T(S s) {
    detail::require_positive(s, "param_T");
    using std::sqrt;
    return (S(2) + S(3) * s + S(2) * s * s + sqrt(s * s + S(4))) / (S(2) * s);
}

/// t(s): the larger root of t^2 - T t + 1 = 0; always > 3 for s > 0.
template <class S = double>
S param_t(S s) {
    const S T = param_T(s);
    using std::sqrt;
    return (T + sqrt(T * T - S(4))) / S(2);
}

/// The defining polynomial s T^2 - (2s^2+3s+2) T + s^3+3s^2+4s+3, evaluated
/// in Horner form (naive term-by-term loses ~6 digits near the small-s end).
template <class S = double>
S riley_phi(S s, S T) {
    return (s * T - (S(2) * s * s + S(3) * s + S(2))) * T + ((s + S(3)) * s + S(4)) * s + S(3);
}

/// t - s - 2 without cancellation: (T-s-2) - 1/t with
/// T-s-2 = (1 + 2/(sqrt(s^2+4)+s))/s.  The naive difference loses the sign of
/// this quantity for s beyond ~1e7, where its true size is ~3/s^2.
template <class S = double>
S t_minus_s_minus_2(S s) {
    detail::require_positive(s, "t_minus_s_minus_2");
    using std::sqrt;
    const S rad = sqrt(s * s + S(4));
    const S t_excess = (S(1) + S(2) / (rad + s)) / s;  // T - s - 2
    return t_excess - S(1) / param_t(s);
}

template <class S>
struct RepParams {
    S s;
    S T;
    S t;

    static RepParams make(S s) {
        detail::require_positive(s, "RepParams");
        RepParams p{s, param_T(s), param_t(s)};
        if (!(p.T > S(4)) || !(p.t > S(3)))
            throw std::logic_error("RepParams: T > 4 / t > 3 violated");
        return p;
    }
};

template <class S>
struct RepValue {
    Mat2<S> X;
    Mat2<S> Y;
    RepParams<S> params;
};

namespace detail {
/// The generator images for an explicit t (shared by the canonical family and
/// the perturbed sensitivity control).
template <class S>
RepValue<S> rep_matrices(S s, S t) {
    using std::sqrt;
    const S rt = sqrt(t);
    const S d = rt - S(1) / rt;
    RepValue<S> rep{Mat2<S>(), Mat2<S>(), RepParams<S>{s, t + S(1) / t, t}};
    rep.X << rt, S(0), S(0), S(1) / rt;
    rep.Y << (t - s - S(1)) / d, s / (d * d) - S(1), -s, (s + S(1) - S(1) / t) / d;
    return rep;
}
}  // namespace detail

/// rho_s on the generators: X = diag(sqrt t, 1/sqrt t), Y with Y(1,0) = -s.
template <class S = double>
RepValue<S> build_rep(S s) {
    detail::require_positive(s, "build_rep");
    return detail::rep_matrices(s, param_t(s));
}

template <class S>
Assignment<Mat2<S>> rep_assignment(const RepValue<S>& rep) {
    return {rep.X, rep.Y};
}

/// Normalized residual of the defining relation rho(wx) = rho(yw).
inline double relation_residual(double s) {
    const auto asg = rep_assignment(build_rep(s));
    return relative_residual(word_evaluate(words::relator_lhs(), asg),
                             word_evaluate(words::relator_rhs(), asg));
}

/// Same check with an explicit t; breaking the t(s) constraint must make the
/// residual blow up, which keeps the relation check non-vacuous.
inline double relation_residual_for_t(double s, double t) {
    detail::require_positive(s, "relation_residual_for_t");
    const auto asg = rep_assignment(detail::rep_matrices(s, t));
    return relative_residual(word_evaluate(words::relator_lhs(), asg),
                             word_evaluate(words::relator_rhs(), asg));
}

/// rho_s(lambda) via the 16-letter word product.  Evaluated in compensated
/// arithmetic: the off-diagonal entries cancel against intermediates of size
/// ~t^2.5, which binary64 cannot resolve at the ends of the working s-range.
inline Mat2d longitude_matrix(double s) {
    detail::require_positive(s, "longitude_matrix");
    const auto rep = build_rep<DoubleDouble>(DoubleDouble(s));
    const auto lam = word_evaluate(words::longitude(), rep_assignment(rep));
    return to_double_matrix(lam);
}

/// Normalized separation of rho(xy) and rho(yx); strictly positive for all s.
inline double nonabelian_residual(double s) {
    const auto rep = build_rep(s);
    const Mat2d xy = rep.X * rep.Y;
    const Mat2d yx = rep.Y * rep.X;
    return relative_residual(xy, yx);
}

}  // namespace slope52
