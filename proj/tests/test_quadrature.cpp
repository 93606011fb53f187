#include <cmath>
#include <numbers>

#include "doctest.h"
#include "drivedamp/errors.hpp"
#include "drivedamp/quadrature.hpp"

using namespace drivedamp;
using std::numbers::pi;

TEST_SUITE("quadrature") {

TEST_CASE("smooth finite integrals") {
    const auto r = quad::gauss_kronrod([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.error < 1e-12);

    const auto g = quad::gauss_kronrod([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(g.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("integrable endpoint singularity") {
    const auto r = quad::gauss_kronrod([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(r.intervals > 1);
}

TEST_CASE("reversed limits flip the sign") {
    const auto f = [](double x) { return x * x; };
    CHECK(quad::gauss_kronrod(f, 1.0, 0.0).value == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(quad::gauss_kronrod(f, 2.0, 2.0).value == 0.0);
}

TEST_CASE("semi-infinite integrals") {
    auto r = quad::gauss_kronrod_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));

    r = quad::gauss_kronrod_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, 0.0);
    CHECK(r.value == doctest::Approx(pi / 2).epsilon(1e-12));

    r = quad::gauss_kronrod_semi_infinite([](double x) { return std::exp(-x); }, 2.0);
    CHECK(r.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("principal value against a rational closed form") {
    // P int_0^inf dx / ((x - c)(1 + x^2)) = (-ln c - c pi / 2) / (1 + c^2)
    for (double c : {0.01, 0.3, 1.0, 2.5, 17.0, 120.0}) {
        const auto r = quad::principal_value_semi_infinite(
            [](double x) { return 1.0 / (1.0 + x * x); }, c, 0.0);
        const double exact = (-std::log(c) - c * pi / 2) / (1.0 + c * c);
        CAPTURE(c);
        CHECK(r.converged);
        CHECK(r.value == doctest::Approx(exact).epsilon(1e-11));
    }
}

TEST_CASE("principal value against the exponential integral") {
    // P int_0^inf e^{-x} / (x - c) dx = -e^{-c} Ei(c)
    for (double c : {0.05, 1.0, 4.0}) {
        const auto r = quad::principal_value_semi_infinite(
            [](double x) { return std::exp(-x); }, c, 0.0);
        CAPTURE(c);
        CHECK(r.value == doctest::Approx(-std::exp(-c) * std::expint(c)).epsilon(1e-11));
    }
}

TEST_CASE("pole must lie inside the range") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(quad::principal_value_semi_infinite(f, 0.0, 0.0), Error);
    CHECK_THROWS_AS(quad::principal_value_semi_infinite(f, -1.0, 0.0), Error);
}

TEST_CASE("interval budget exhaustion is reported") {
    quad::Options opt;
    opt.max_intervals = 3;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-15;
    const auto r =
        quad::gauss_kronrod([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, opt);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals <= 3);
}

}
