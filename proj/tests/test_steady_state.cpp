#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "drivedamp/bath_rates.hpp"
#include "drivedamp/errors.hpp"
#include "drivedamp/steady_state.hpp"
#include "support.hpp"

using namespace drivedamp;

namespace {

SystemParams random_params(std::mt19937_64& rng) {
    while (true) {
        SystemParams p;
        p.omega_b = testing::uniform(rng, 0.4, 1.6);
        p.omega_p = testing::uniform(rng, 4.0, 16.0);
        p.kappa = testing::uniform(rng, 0.0, 0.3) * std::abs(detunings(p).sum);
        p.nu1 = testing::uniform(rng, 0.5, 2.0);
        p.nu2 = testing::uniform(rng, 0.5, 2.0);
        p.zeta1 = testing::log_uniform(rng, 1e-3, 1e-1);
        p.zeta2 = testing::log_uniform(rng, 1e-3, 1e-1);
        if (validate(p).ok()) return p;
    }
}

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::domain;
}

}  // namespace

TEST_SUITE("steady_state") {

TEST_CASE("no squeezing leaves the modes untouched") {
    const auto bt = bogoliubov({-9.0, -9.0, -18.0}, 0.0);
    CHECK(bt.alpha == std::complex<double>(0.0, 1.0));
    CHECK(bt.beta_sq() == 0.0);
}

TEST_CASE("Bogoliubov weights for detuned modes") {
    const auto bt = bogoliubov({-9.0, -9.4, -18.4}, 1.84);
    CHECK(testing::rel_diff(bt.alpha_sq(), 1.010310363079829) < 1e-13);
    CHECK(testing::rel_diff(bt.beta_sq(), 0.0103103630798288) < 1e-11);
    CHECK(bt.alpha.real() == 0.0);
    CHECK(bt.alpha.imag() > 0.0);
    CHECK(bt.beta.real() == 0.0);
    CHECK(bt.beta.imag() < 0.0);
}

TEST_CASE("bosonic commutator survives the transform") {
    std::mt19937_64 rng(21);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double s = testing::uniform(rng, -40.0, 40.0);
        const double kappa = testing::uniform(rng, 0.0, 0.49) * std::abs(s);
        const auto bt = bogoliubov({0.5 * s, 0.5 * s, s}, kappa);
        worst = std::max(worst, std::abs(bt.alpha_sq() - bt.beta_sq() - 1.0));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("squeezing weight grows towards threshold") {
    const Detunings d{-9.0, -9.0, -18.0};
    double previous = -1.0;
    for (double frac : {0.0, 0.1, 0.3, 0.45, 0.49, 0.499, 0.49999, 0.4999999}) {
        const double b2 = bogoliubov(d, frac * 18.0).beta_sq();
        CHECK(b2 > previous);
        previous = b2;
    }
    CHECK(previous > 100.0);
    CHECK(code_of([&] { bogoliubov(d, 9.0); }) == ErrorCode::parametric_instability);
    CHECK(code_of([&] { bogoliubov(d, -1.0); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("normal-mode frequencies for detuned modes") {
    const auto f = normal_mode_frequencies({-9.0, -9.4, -18.4}, 1.84);
    CHECK(f.alpha11 == doctest::Approx(-9.5653).epsilon(1e-5));
    CHECK(f.alpha22 == doctest::Approx(-9.9653).epsilon(1e-5));
    CHECK(f.alpha11 - f.alpha22 == doctest::Approx(0.4));
}

TEST_CASE("normal-mode frequencies reduce to the detunings without squeezing") {
    for (const Detunings d : {Detunings{-9.0, -9.4, -18.4}, Detunings{0.5, 0.8, 1.3}}) {
        const auto f = normal_mode_frequencies(d, 0.0);
        CHECK(f.alpha11 == doctest::Approx(d.delta1).epsilon(1e-15));
        CHECK(f.alpha22 == doctest::Approx(d.delta2).epsilon(1e-15));
    }
}

TEST_CASE("positive detuning sum gives the diagonalizing frequencies") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const double d1 = testing::uniform(rng, 0.1, 5.0);
        const double d2 = testing::uniform(rng, 0.1, 5.0);
        const double s = d1 + d2;
        const double kappa = testing::uniform(rng, 0.0, 0.45) * s;
        const auto f = normal_mode_frequencies({d1, d2, s}, kappa);
        const double half = 0.5 * std::sqrt(s * s - 4 * kappa * kappa);
        CHECK(f.alpha11 == doctest::Approx(0.5 * (d1 - d2) + half).epsilon(1e-12));
        CHECK(f.alpha22 == doctest::Approx(-0.5 * (d1 - d2) + half).epsilon(1e-12));
    }
}

TEST_CASE("master coefficients at the detuned reference point") {
    const MasterCoefficients mc = master_coefficients(testing::asymmetric_point(0.003, 0.01));
    CHECK(testing::rel_diff(mc.C, 0.003481348058307776) < 1e-12);
    CHECK(testing::rel_diff(mc.D, 1.6512175723434143e-05) < 1e-12);
    CHECK(mc.steady_state_exists());
    const Occupations occ = steady_occupations(mc);
    CHECK(occ.n_l == doctest::Approx(4.76564e-3).epsilon(1e-5));
    CHECK(occ.n_m == doctest::Approx(4.43281e-3).epsilon(1e-5));
}

TEST_CASE("symmetric reference point") {
    const SteadyState ss = steady_state(testing::symmetric_point(0.01, 0.01));
    CHECK(ss.occupations.n_l == doctest::Approx(1.39923e-3).epsilon(1e-5));
    CHECK(ss.occupations.n_l == ss.occupations.n_m);
}

TEST_CASE("without a pump the heating terms vanish exactly") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        SystemParams p;
        p.omega_p = 0.0;
        p.omega_b = testing::uniform(rng, 0.4, 1.6);
        p.kappa = testing::uniform(rng, 0.0, 0.45) * (p.omega_a + p.omega_b);
        p.zeta1 = testing::log_uniform(rng, 1e-3, 1e-1);
        p.zeta2 = testing::log_uniform(rng, 1e-3, 1e-1);
        const MasterCoefficients mc = master_coefficients(p);
        CHECK(mc.D == 0.0);
        CHECK(mc.F == 0.0);
        const Occupations occ = steady_occupations(mc);
        CHECK(occ.n_l == 0.0);
        CHECK(occ.n_m == 0.0);
    }
}

TEST_CASE("steady occupations from hand-picked coefficients") {
    CHECK(steady_occupations({0, 0, 2.0, 1.0, 4.0, 1.0}).n_l == 1.0);
    CHECK(steady_occupations({0, 0, 2.0, 1.0, 4.0, 1.0}).n_m == doctest::Approx(1.0 / 3.0));
    CHECK(steady_occupations({0, 0, 1e-3, 9.9e-4, 1.0, 0.0}).n_l == doctest::Approx(99.0));
    CHECK(code_of([] { steady_occupations({0, 0, 1.0, 1.0, 1.0, 0.0}); }) ==
          ErrorCode::no_steady_state);
    CHECK(code_of([] { steady_occupations({0, 0, 1.0, 0.0, 1.0, 2.0}); }) ==
          ErrorCode::no_steady_state);
    CHECK(code_of([] { steady_occupations({0, 0, 1.0, 1.0 - 1e-14, 1.0, 0.0}); }) ==
          ErrorCode::near_threshold);
}

TEST_CASE("steady_state reports the first validation failure") {
    SystemParams p = testing::symmetric_point(0.01, 0.01);
    p.kappa = 9.3;
    CHECK(code_of([&] { steady_state(p); }) == ErrorCode::parametric_instability);
    CHECK(code_of([] { steady_state(testing::symmetric_point(0.0, 0.0)); }) ==
          ErrorCode::no_steady_state);
}

TEST_CASE("common rescaling of both couplings leaves the state unchanged") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 300; ++i) {
        const SystemParams p = random_params(rng);
        const SteadyState ref = steady_state(p);

        SystemParams doubled = p;
        doubled.zeta1 *= 2.0;
        doubled.zeta2 *= 2.0;
        const SteadyState d = steady_state(doubled);
        CHECK(d.occupations.n_l == ref.occupations.n_l);
        CHECK(d.occupations.n_m == ref.occupations.n_m);
        CHECK(d.moments.ab == ref.moments.ab);

        const double s = testing::log_uniform(rng, 0.1, 10.0);
        SystemParams scaled = p;
        scaled.zeta1 *= s;
        scaled.zeta2 *= s;
        const SteadyState r = steady_state(scaled);
        CHECK(testing::rel_diff(r.occupations.n_l, ref.occupations.n_l) < 1e-12);
        CHECK(testing::rel_diff(r.occupations.n_m, ref.occupations.n_m) < 1e-12);
        CHECK(testing::rel_diff(r.moments.n_a, ref.moments.n_a) < 1e-12);
    }
}

TEST_CASE("Lamb shifts do not enter the steady state") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = random_params(rng);
        const Detunings d = detunings(p);
        const auto bt = bogoliubov(d, p.kappa);
        const auto f = normal_mode_frequencies(d, p.kappa);
        const RateTable t = rate_table(p, f);
        RateTable shifted = t;
        for (auto* bath : {&shifted.bath1, &shifted.bath2}) {
            for (auto& e : *bath) {
                e.value.imag(e.value.imag() * testing::uniform(rng, -5.0, 5.0) + 0.3);
            }
        }
        const MasterCoefficients a = master_coefficients(bt, f, t);
        const MasterCoefficients b = master_coefficients(bt, f, shifted);
        CHECK(a.C == b.C);
        CHECK(a.D == b.D);
        CHECK(a.E == b.E);
        CHECK(a.F == b.F);
        const BareMoments ma = bare_mode_moments(bt, steady_occupations(a));
        const BareMoments mb = bare_mode_moments(bt, steady_occupations(b));
        CHECK(ma.n_a == mb.n_a);
        CHECK(ma.n_b == mb.n_b);
        CHECK(ma.ab == mb.ab);
    }
}

TEST_CASE("bare moments obey the number-difference and Cauchy-Schwarz relations") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 300; ++i) {
        const SystemParams p = random_params(rng);
        const auto bt = bogoliubov(detunings(p), p.kappa);
        const SteadyState ss = steady_state(p);
        const BareMoments& m = ss.moments;
        const double diff = ss.occupations.n_l - ss.occupations.n_m;
        CHECK(std::abs((m.n_a - m.n_b) - diff) < 1e-12 * (1.0 + m.n_a));
        CHECK(std::norm(m.ab) <= m.n_a * (m.n_b + 1.0) * (1.0 + 1e-12));
        CHECK(m.aa == std::complex<double>{});
        CHECK(m.adag_b == std::complex<double>{});
        CHECK(m.n_a >= bt.beta_sq());
    }
}

TEST_CASE("bare moments reject negative occupations") {
    const auto bt = bogoliubov({-9.0, -9.0, -18.0}, 1.8);
    CHECK(code_of([&] { bare_mode_moments(bt, {-0.1, 0.0}); }) == ErrorCode::domain);
}

TEST_CASE("characteristic function expansion matches the bare moments") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 500; ++i) {
        const double s = -testing::uniform(rng, 2.0, 40.0);
        const double kappa = testing::uniform(rng, 0.0, 0.49) * std::abs(s);
        const auto bt = bogoliubov({0.5 * s, 0.5 * s, s}, kappa);
        const Occupations occ{testing::log_uniform(rng, 1e-6, 10.0),
                              testing::log_uniform(rng, 1e-6, 10.0)};
        const auto closed = characteristic_exponent(bt, occ);
        const auto moments = characteristic_exponent(bare_mode_moments(bt, occ));
        const double scale = 1.0 + bt.alpha_sq() * (1.0 + occ.n_l + occ.n_m);
        CHECK(std::abs(closed.P - moments.P) < 1e-13 * scale);
        CHECK(std::abs(closed.Q - moments.Q) < 1e-13 * scale);
        CHECK(std::abs(closed.R - moments.R) < 1e-13 * scale);
    }
}

}
