#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "calibra/cocycle.hpp"
#include "calibra/euler_integrals.hpp"
#include "calibra/integrate.hpp"
#include "oracles.hpp"

using namespace calibra;

TEST_CASE("mc_integrate on a constant") {
    const Integrand one = [](std::span<const double>) { return 1.0; };
    const MCEstimate est = mc_integrate(one, 2, 1000, 5);
    CHECK(est.value == 1.0);
    CHECK(est.std_error == 0.0);
    CHECK(est.samples == 1000);
    CHECK(est.seed == 5);
}

TEST_CASE("mc_integrate on a zero-mean integrand") {
    const Integrand f = [](std::span<const double> a) { return std::cos(a[0]); };
    const MCEstimate est = mc_integrate(f, 1, 100000, 17);
    CHECK(std::abs(est.value) <= 3.0 * est.std_error);
    CHECK(est.std_error == doctest::Approx(std::sqrt(0.5 / 100000)).epsilon(0.05));
}

TEST_CASE("mc_integrate recovers 1/pi for the weighted euler triple") {
    const Integrand f = [](std::span<const double> a) {
        return euler_class(CirclePoint(a[0]), CirclePoint(a[1]), CirclePoint(a[2])) * 2.0 *
               std::cos(a[1]) * std::sin(a[2]);
    };
    const MCEstimate est = mc_integrate(f, 3, 1000000, 99);
    CHECK(std::abs(est.value - 1.0 / M_PI) <= 3.0 * est.std_error);
}

TEST_CASE("mc_integrate is reproducible across thread counts") {
    const Integrand f = [](std::span<const double> a) { return std::sin(a[0]) * std::cos(a[1]); };
    const MCEstimate a = mc_integrate(f, 2, 50001, 123, 1);
    const MCEstimate b = mc_integrate(f, 2, 50001, 123, 2);
    const MCEstimate c = mc_integrate(f, 2, 50001, 123, 5);
    const MCEstimate d = mc_integrate(f, 2, 50001, 123, 0);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.value == d.value);
    CHECK(a.std_error == b.std_error);
    // different seed gives a different stream
    const MCEstimate e = mc_integrate(f, 2, 50001, 124);
    CHECK(a.value != e.value);
}

TEST_CASE("mc_integrate validates inputs") {
    const Integrand one = [](std::span<const double>) { return 1.0; };
    CHECK_THROWS_AS(mc_integrate(one, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(mc_integrate(one, 0, 100, 0), std::invalid_argument);
}

TEST_CASE("tensor_quadrature exact cases") {
    const Integrand one = [](std::span<const double>) { return 1.0; };
    CHECK(tensor_quadrature(one, 2, 16) == 1.0);

    const Integrand cos2 = [](std::span<const double> a) {
        return std::cos(a[0]) * std::cos(a[0]);
    };
    CHECK(std::abs(tensor_quadrature(cos2, 1, 64) - 0.5) <= 1e-12);
}

TEST_CASE("tensor_quadrature integrates the poisson kernel to 1") {
    const DiskPoint x(0.5, 0.0);
    const Integrand f = [&x](std::span<const double> a) {
        return poisson_kernel(x, CirclePoint(a[0]));
    };
    CHECK(std::abs(tensor_quadrature(f, 1, 10000) - 1.0) <= 1e-8);
}

TEST_CASE("tensor_quadrature enforces the node budget") {
    const Integrand one = [](std::span<const double>) { return 1.0; };
    CHECK_THROWS_AS(tensor_quadrature(one, 5, 100), std::runtime_error);
    CHECK_THROWS_AS(tensor_quadrature(one, 1, 3), std::invalid_argument);
}

TEST_CASE("euler_marginal closed form") {
    CHECK(euler_marginal(CirclePoint(1.1), CirclePoint(1.1)) == 0.0);
    CHECK(std::abs(euler_marginal(CirclePoint(0.0), CirclePoint(M_PI))) <= 1e-15);
    CHECK(euler_marginal(CirclePoint(0.0), CirclePoint(M_PI / 2.0)) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("euler_marginal agrees with Monte Carlo") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int t = 0; t < 8; ++t) {
        const CirclePoint b(u(rng)), c(u(rng));
        const Integrand f = [b, c](std::span<const double> a) {
            return static_cast<double>(euler_class(CirclePoint(a[0]), b, c));
        };
        const MCEstimate est = mc_integrate(f, 1, 100000, 1000 + static_cast<std::uint64_t>(t));
        CHECK(std::abs(est.value - euler_marginal(b, c)) <= 3.0 * est.std_error);
    }
}

TEST_CASE("euler_trig_triple on matched pairs") {
    for (int k = 1; k <= 8; ++k) {
        const double v = euler_trig_triple({k, Phase::cos, 1.0}, {k, Phase::sin, 1.0});
        CHECK(std::abs(v - 1.0 / (2.0 * M_PI * k)) <= 1e-12);
        // the sqrt2-normalized pair gives 1/(pi k)
        const double w = euler_trig_triple({k, Phase::cos, std::sqrt(2.0)},
                                           {k, Phase::sin, std::sqrt(2.0)});
        CHECK(std::abs(w - 1.0 / (M_PI * k)) <= 1e-12);
    }
}

TEST_CASE("euler_trig_triple vanishes off matched frequency and phase") {
    CHECK(euler_trig_triple({1, Phase::cos, 1.0}, {1, Phase::cos, 1.0}) == 0.0);
    CHECK(euler_trig_triple({1, Phase::sin, 1.0}, {1, Phase::sin, 1.0}) == 0.0);
    CHECK(euler_trig_triple({1, Phase::cos, 1.0}, {2, Phase::sin, 1.0}) == 0.0);
    CHECK(euler_trig_triple({3, Phase::sin, 2.0}, {1, Phase::cos, 5.0}) == 0.0);
}

TEST_CASE("cos-cos triple integral vanishes under the quadrature oracle too") {
    const double q = oracle::quadrature_3d(
        [](double t0, double t1, double t2) {
            return oracle::euler(t0, t1, t2) * std::cos(t1) * std::cos(t2);
        },
        160);
    CHECK(std::abs(q) <= 1e-10);  // grid symmetry cancels the terms pairwise
}

TEST_CASE("euler_trig_triple antisymmetry under slot swap") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> uk(1, 4);
    std::uniform_real_distribution<double> ua(0.5, 2.0);
    for (int t = 0; t < 50; ++t) {
        const TrigMonomial m1{uk(rng), rng() % 2 ? Phase::cos : Phase::sin, ua(rng)};
        const TrigMonomial m2{uk(rng), rng() % 2 ? Phase::cos : Phase::sin, ua(rng)};
        CHECK(std::abs(euler_trig_triple(m1, m2) + euler_trig_triple(m2, m1)) <= 1e-12);
    }
}

TEST_CASE("scaling law: k * triple(cos k, sin k) is constant") {
    const double base = euler_trig_triple({1, Phase::cos, 1.0}, {1, Phase::sin, 1.0});
    for (int k = 2; k <= 8; ++k) {
        const double v = euler_trig_triple({k, Phase::cos, 1.0}, {k, Phase::sin, 1.0});
        CHECK(std::abs(k * v - base) <= 1e-12);
    }
}

TEST_CASE("euler_trig_triple agrees with direct 3-D Monte Carlo") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> uk(1, 3);
    for (int t = 0; t < 6; ++t) {
        const TrigMonomial m1{uk(rng), rng() % 2 ? Phase::cos : Phase::sin, 1.0};
        const TrigMonomial m2{uk(rng), rng() % 2 ? Phase::cos : Phase::sin, 1.0};
        const Integrand f = [m1, m2](std::span<const double> a) {
            return euler_class(CirclePoint(a[0]), CirclePoint(a[1]), CirclePoint(a[2])) * m1(a[1]) *
                   m2(a[2]);
        };
        const MCEstimate est = mc_integrate(f, 3, 200000, 2000 + static_cast<std::uint64_t>(t));
        CHECK(std::abs(est.value - euler_trig_triple(m1, m2)) <= 3.0 * est.std_error);
    }
}
