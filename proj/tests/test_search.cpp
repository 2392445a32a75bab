#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "calibra/search.hpp"
#include "oracles.hpp"

using namespace calibra;

TEST_CASE("fourier basis enumerates the half-space") {
    const auto b1 = fourier_basis(1, 3);
    CHECK(b1.size() == 3);  // k = 1, 2, 3
    const auto b2 = fourier_basis(2, 1);
    CHECK(b2.size() == 4);  // (0,1), (1,-1), (1,0), (1,1)
    for (const auto& k : b2) {
        bool positive_lead = false;
        for (int v : k.k()) {
            if (v > 0) { positive_lead = true; break; }
            if (v < 0) break;
        }
        CHECK(positive_lead);
    }
    const auto b23 = fourier_basis(2, 3);
    CHECK(b23.size() == 24);
}

TEST_CASE("orthonormalize keeps an orthonormal input") {
    const auto p = FrameParameterization::from_standard(2, 2);
    const Frame f = orthonormalize(p);
    CHECK(f.ortho_defect() <= 1e-15);
    for (int i = 0; i < 2; ++i) {
        std::vector<int> k{0, 0};
        k[static_cast<std::size_t>(i)] = 1;
        const FourierIndex idx{k};
        CHECK(f[2 * i].coefficient(idx, Phase::cos) ==
              doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("orthonormalize rescales a scaled standard frame back") {
    auto p = FrameParameterization::from_standard(1, 2);
    for (auto& v : p.raw)
        for (auto& x : v) x *= 7.0;
    const Frame f = orthonormalize(p);
    const FourierIndex k1{std::vector<int>{1}};
    CHECK(f[0].coefficient(k1, Phase::cos) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(f[1].coefficient(k1, Phase::sin) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("orthonormalize produces an identity Gram matrix") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {1, 2}) {
        auto p = FrameParameterization::zeros(n, 2);
        for (auto& v : p.raw)
            for (auto& x : v) x = u(rng);
        const Frame f = orthonormalize(p);
        for (std::size_t i = 0; i < f.functions().size(); ++i)
            for (std::size_t j = 0; j < f.functions().size(); ++j) {
                const double want = i == j ? 1.0 : 0.0;
                CHECK(std::abs(inner_product(f[static_cast<int>(i)], f[static_cast<int>(j)]) -
                               want) <= 1e-12);
            }
    }
}

TEST_CASE("orthonormalize rejects dependent inputs") {
    auto p = FrameParameterization::zeros(1, 1);
    p.raw[0][0] = 1.0;
    p.raw[1][0] = 1.0;  // same vector twice
    CHECK_THROWS_AS(orthonormalize(p), std::runtime_error);
}

TEST_CASE("objective values on known frames") {
    CHECK(std::abs(objective(standard_frame(1)) - 1.0 / M_PI) <= 5e-16);

    TrigPolynomial f1(1), f2(1);
    f1.add(std::vector<int>{2}, std::sqrt(2.0), 0.0);
    f2.add(std::vector<int>{2}, 0.0, std::sqrt(2.0));
    CHECK(std::abs(objective(Frame::make({f1, f2})) - 1.0 / (2.0 * M_PI)) <= 1e-15);

    TrigPolynomial g1(1), g2(1);
    g1.add(std::vector<int>{1}, std::sqrt(2.0), 0.0);
    g2.add(std::vector<int>{2}, 0.0, std::sqrt(2.0));
    CHECK(objective(Frame::make({g1, g2})) == 0.0);
}

TEST_CASE("search finds the comass at n = 1") {
    const SearchReport rep = search(1, 2, 8, 2024);
    CHECK(std::abs(rep.gap) <= 1e-6);
    CHECK(rep.trace_max <= rep.theoretical + tol_comass);
    CHECK(rep.best_value <= rep.theoretical + tol_comass);
    REQUIRE(rep.best_frame.has_value());
    CHECK(std::abs(objective(*rep.best_frame) - rep.best_value) <= 1e-15);
}

TEST_CASE("search is deterministic") {
    const SearchReport a = search(1, 2, 4, 99, 1);
    const SearchReport b = search(1, 2, 4, 99, 3);
    CHECK(a.best_value == b.best_value);
    CHECK(a.iterations == b.iterations);
    CHECK(a.trace_max == b.trace_max);
    CHECK(a.gap == b.gap);
}

TEST_CASE("search at n = 2 with the standard seed restart") {
    const SearchReport rep = search(2, 1, 3, 7);
    CHECK(std::abs(rep.gap) <= 1e-6);
    CHECK(rep.trace_max <= rep.theoretical + tol_comass);
}

TEST_CASE("a single restart from the standard frame is already optimal") {
    const SearchReport rep = search(1, 1, 1, 5);
    CHECK(std::abs(rep.gap) <= 1e-12);
}

TEST_CASE("search validates its budget") {
    CHECK_THROWS_AS(search(4, 2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(search(1, 4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(search(1, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("certified local maximum at the standard frame") {
    const LocalMaxReport rep = certify_local_max(1, 300, 1e-3, 31);
    CHECK(rep.pass);
    CHECK(rep.max_objective <= rep.theoretical + 1e-12);

    const LocalMaxReport exact = certify_local_max(1, 5, 0.0, 32);
    CHECK(std::abs(exact.max_objective - 1.0 / M_PI) <= 5e-16);

    CHECK_THROWS_AS(certify_local_max(1, 10, 0.1, 0), std::invalid_argument);
}

TEST_CASE("rotation within a pair leaves the objective unchanged") {
    for (int n : {1, 2}) {
        for (double c : {0.25, 1.0, 2.5}) {
            std::vector<TrigPolynomial> fs;
            for (int j = 0; j < n; ++j) {
                std::vector<int> k(static_cast<std::size_t>(n), 0);
                k[static_cast<std::size_t>(j)] = 1;
                const double shift = j == 0 ? c : 0.0;
                TrigPolynomial fc(n), fsin(n);
                fc.add(k, std::sqrt(2.0) * std::cos(shift), -std::sqrt(2.0) * std::sin(shift));
                fsin.add(k, std::sqrt(2.0) * std::sin(shift), std::sqrt(2.0) * std::cos(shift));
                fs.push_back(std::move(fc));
                fs.push_back(std::move(fsin));
            }
            CHECK(std::abs(objective(Frame::make(fs)) - comass_bound(n)) <= 1e-12);
        }
    }
}
