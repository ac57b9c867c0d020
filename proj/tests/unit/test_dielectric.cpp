#include <doctest.h>

#include <cmath>
#include <random>

#include "dmodes/dielectric.hpp"
#include "dmodes/errors.hpp"

using namespace dmodes;

TEST_CASE("damping ratio rejects negative and non-finite values")
{
    CHECK_THROWS_AS(DampingRatio{-1e-12}, DomainError);
    CHECK_THROWS_AS(DampingRatio{NAN}, DomainError);
    CHECK_THROWS_AS(DampingRatio{INFINITY}, DomainError);
    CHECK(DampingRatio(0.0).lossless());
}

TEST_CASE("epsilon vanishes at the plasma frequency without damping")
{
    const ComplexValue e = epsilon({1.0, 0.0}, DampingRatio(0.0), HalfPlaneBranch::Upper);
    CHECK(std::abs(e) < 1e-15);
}

TEST_CASE("epsilon at w = 1, x = 0.1")
{
    // 1 - (1 - 0.2i) / 1.04
    const ComplexValue e = epsilon({1.0, 0.0}, DampingRatio(0.1), HalfPlaneBranch::Upper);
    CHECK(std::abs(e.real() - 0.0384615384615385) < 1e-14);
    CHECK(std::abs(e.imag() - 0.192307692307692) < 1e-14);
}

TEST_CASE("lower branch mirrors the upper branch")
{
    const DampingRatio x(0.05);
    const ComplexValue w{0.7, 0.3};
    const ComplexValue lower = epsilon(w, x, HalfPlaneBranch::Lower);
    const ComplexValue mirrored = std::conj(epsilon(std::conj(w), x, HalfPlaneBranch::Upper));
    CHECK(std::abs(lower - mirrored) <= 1e-15 * std::abs(lower));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(-2.0, 2.0), ux(0.0, 0.5);
    for (int i = 0; i < 500; ++i) {
        const ComplexValue z{re(rng), im(rng)};
        if (std::abs(z.imag()) < 1e-6) continue;
        const DampingRatio xr(ux(rng));
        const ComplexValue a = epsilon(z, xr, HalfPlaneBranch::Lower);
        const ComplexValue b = std::conj(epsilon(std::conj(z), xr, HalfPlaneBranch::Upper));
        CHECK(std::abs(a - b) <= 4e-16 * std::abs(a));
    }
}

TEST_CASE("damping term changes sign across the real axis")
{
    const DampingRatio x(0.1);
    for (double w : {0.2, 0.7, 1.0, 1.9, 4.0}) {
        const double delta = 1e-6;
        const double above = epsilon({w, delta}, x, HalfPlaneBranch::Upper).imag();
        const double below = epsilon({w, -delta}, x, HalfPlaneBranch::Lower).imag();
        CHECK(above * below < 0.0);
    }
}

TEST_CASE("epsilon poles and zero frequency are domain errors")
{
    const DampingRatio x(0.1);
    CHECK_THROWS_AS(epsilon({0.0, 0.0}, x, HalfPlaneBranch::Upper), DomainError);
    CHECK_THROWS_AS(epsilon({0.0, -0.2}, x, HalfPlaneBranch::Upper), DomainError);
    CHECK_THROWS_AS(epsilon({0.0, 0.2}, x, HalfPlaneBranch::Lower), DomainError);
    CHECK_NOTHROW(epsilon({0.0, 0.2}, x, HalfPlaneBranch::Upper));
}

TEST_CASE("epsilon on the imaginary axis")
{
    CHECK(epsilon_imag_axis(1.0, DampingRatio(0.0)) == 2.0);
    CHECK(epsilon_imag_axis(1.0, DampingRatio(0.1)) == doctest::Approx(1.0 + 1.0 / 1.2).epsilon(1e-15));
    CHECK(epsilon_imag_axis(1e3, DampingRatio(0.1)) - 1.0 < 1.0e-6);
    CHECK_THROWS_AS(epsilon_imag_axis(0.0, DampingRatio(0.1)), DomainError);
    CHECK_THROWS_AS(epsilon_imag_axis(-1.0, DampingRatio(0.1)), DomainError);

    for (double x : {0.0, 0.01, 0.3}) {
        double prev = INFINITY;
        for (double w = 1e-3; w < 100.0; w *= 1.1) {
            const double e = epsilon_imag_axis(w, DampingRatio(x));
            CHECK(e < prev);
            CHECK(e > 1.0);
            prev = e;
            const ComplexValue full = epsilon({0.0, w}, DampingRatio(x), HalfPlaneBranch::Upper);
            CHECK(std::abs(full.imag()) <= 1e-15);
            CHECK(full.real() == doctest::Approx(e).epsilon(1e-14));
        }
    }
}

TEST_CASE("imaginary part on the real axis")
{
    CHECK(im_epsilon(1.0, DampingRatio(0.0)) == 0.0);
    CHECK(im_epsilon(1.0, DampingRatio(0.1)) == doctest::Approx(0.2 / 1.04).epsilon(1e-15));
    CHECK(im_epsilon(0.5, DampingRatio(0.1)) == doctest::Approx(1.379310344827586).epsilon(1e-14));
    for (double w : {0.1, 0.5, 1.0, 2.5}) {
        const DampingRatio x(0.1);
        CHECK(im_epsilon(w, x) == doctest::Approx(epsilon({w, 0.0}, x, HalfPlaneBranch::Upper).imag()).epsilon(1e-14));
    }
    CHECK_THROWS_AS(im_epsilon(0.0, DampingRatio(0.1)), DomainError);
}
