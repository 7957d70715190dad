#include <doctest.h>

#include <random>

#include "slope52/matrix.hpp"
#include "slope52/rep.hpp"

using namespace slope52;

TEST_CASE("matrix product basics") {
    const Mat2d id = Mat2d::Identity();
    CHECK(max_abs_diff<double>(id * id, id) == 0.0);

    Mat2d a, b, expected;
    a << 2.0, 0.0, 0.0, 0.5;
    b << 3.0, 0.0, 0.0, 1.0 / 3.0;
    expected << 6.0, 0.0, 0.0, 1.0 / 6.0;
    CHECK(max_abs_diff<double>(a * b, expected) <= 1e-15);
}

TEST_CASE("adjugate inverse cancels the representation meridian") {
    const Mat2d x = build_rep(1.0).X;
    CHECK(max_abs_diff<double>(x * adjugate_inverse(x), Mat2d::Identity()) <= 1e-12);
}

TEST_CASE("adjugate inverse uses the computed determinant") {
    Mat2d m;
    m << 2.0, 1.0, 0.0, 2.0;  // det 4
    const Mat2d inv = adjugate_inverse(m);
    CHECK(max_abs_diff<double>(m * inv, Mat2d::Identity()) <= 1e-15);
    CHECK(inv(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("determinant is multiplicative on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        Mat2d a, b;
        a << dist(rng), dist(rng), dist(rng), dist(rng);
        b << dist(rng), dist(rng), dist(rng), dist(rng);
        const double lhs = det2<double>(a * b);
        const double rhs = det2(a) * det2(b);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("relative residual normalizes by the larger entry scale") {
    Mat2d a, b;
    a << 1e6, 0.0, 0.0, 1e6;
    b << 1e6 + 1.0, 0.0, 0.0, 1e6;
    CHECK(relative_residual(a, b) == doctest::Approx(1e-6).epsilon(1e-9));
    CHECK(is_unimodular(Mat2d(Mat2d::Identity())));
    CHECK_FALSE(is_unimodular(a));
}
