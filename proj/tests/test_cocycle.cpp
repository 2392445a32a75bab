#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calibra/cocycle.hpp"
#include "oracles.hpp"

using namespace calibra;

TEST_CASE("euler class orientation") {
    CHECK(euler_class(CirclePoint(0.1), CirclePoint(0.2), CirclePoint(0.3)) == 1);
    CHECK(euler_class(CirclePoint(0.3), CirclePoint(0.2), CirclePoint(0.1)) == -1);
    CHECK(euler_class(CirclePoint(0.2), CirclePoint(0.2), CirclePoint(0.5)) == 0);
    // wrap-around triples
    CHECK(euler_class(CirclePoint(6.0), CirclePoint(0.5), CirclePoint(2.0)) == 1);
    CHECK(euler_class(CirclePoint(2.0), CirclePoint(0.5), CirclePoint(6.0)) == -1);
}

TEST_CASE("euler class agrees with the trig oracle") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int t = 0; t < 1000; ++t) {
        const double a = u(rng), b = u(rng), c = u(rng);
        CHECK(euler_class(CirclePoint(a), CirclePoint(b), CirclePoint(c)) == oracle::euler(a, b, c));
    }
}

TEST_CASE("euler class is alternating") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int t = 0; t < 1000; ++t) {
        const CirclePoint a(u(rng)), b(u(rng)), c(u(rng));
        const int e = euler_class(a, b, c);
        CHECK(euler_class(b, a, c) == -e);
        CHECK(euler_class(b, c, a) == e);
        CHECK(euler_class(c, b, a) == -e);
    }
}

TEST_CASE("cocycle degenerates to the euler class at n = 1") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 1000; ++t) {
        const auto pts = oracle::random_tuple(rng, 1, 3);
        const int e = euler_class(pts[0][0], pts[1][0], pts[2][0]);
        CHECK(cocycle(pts) == ExactRational(e));
    }
}

TEST_CASE("cocycle value frozen from the independent oracle") {
    // tuple on T^2 whose exhaustive 120-permutation sum gives exactly 1/3
    const std::vector<std::vector<double>> angles = {
        {0.1, 0.2}, {0.5, 0.9}, {1.3, 2.1}, {2.7, 3.5}, {4.0, 5.0}};
    std::vector<TorusPoint> pts;
    for (const auto& a : angles) pts.push_back(TorusPoint::from_angles(a));

    const ExactRational c = cocycle(pts);
    CHECK(c.numerator() == 1);
    CHECK(c.denominator() == 3);
    CHECK(120 % c.denominator() == 0);

    const auto [num, den] = oracle::cocycle(angles);
    CHECK(c.numerator() == num);
    CHECK(c.denominator() == den);
}

TEST_CASE("cocycle agrees with the oracle on random tuples") {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int n : {1, 2}) {
        for (int t = 0; t < 50; ++t) {
            std::vector<std::vector<double>> angles(static_cast<std::size_t>(2 * n + 1),
                                                    std::vector<double>(static_cast<std::size_t>(n)));
            for (auto& p : angles)
                for (auto& x : p) x = u(rng);
            std::vector<TorusPoint> pts;
            for (const auto& a : angles) pts.push_back(TorusPoint::from_angles(a));
            const auto [num, den] = oracle::cocycle(angles);
            CHECK(cocycle(pts) == ExactRational(num, den));
        }
    }
}

TEST_CASE("cocycle vanishes on tuples with a repeated point") {
    std::mt19937_64 rng(25);
    for (int n : {1, 2}) {
        auto pts = oracle::random_tuple(rng, n, 2 * n + 1);
        pts[static_cast<std::size_t>(2 * n)] = pts[0];
        CHECK(cocycle(pts).is_zero());
    }
}

TEST_CASE("cocycle is alternating, exactly") {
    std::mt19937_64 rng(26);
    for (int n : {1, 2, 3}) {
        const int rounds = n == 3 ? 100 : 1000;
        std::uniform_int_distribution<int> pick(0, 2 * n);
        for (int t = 0; t < rounds; ++t) {
            auto pts = oracle::random_tuple(rng, n, 2 * n + 1);
            int i = pick(rng), j = pick(rng);
            if (i == j) j = (j + 1) % (2 * n + 1);
            auto swapped = pts;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
            CHECK(cocycle(swapped) == -cocycle(pts));
        }
    }
}

TEST_CASE("cocycle is bounded by 1 in absolute value") {
    std::mt19937_64 rng(27);
    const ExactRational one(1);
    for (int n : {1, 2}) {
        for (int t = 0; t < 500; ++t) {
            CHECK(cocycle(oracle::random_tuple(rng, n, 2 * n + 1)).abs() <= one);
        }
    }
}

TEST_CASE("coboundary vanishes identically") {
    std::mt19937_64 rng(28);
    for (int n : {1, 2}) {
        for (int t = 0; t < 300; ++t) {
            CHECK(coboundary(oracle::random_tuple(rng, n, 2 * n + 2)).is_zero());
        }
    }
    for (int t = 0; t < 25; ++t)
        CHECK(coboundary(oracle::random_tuple(rng, 3, 8)).is_zero());

    // repeated points
    auto pts = oracle::random_tuple(rng, 2, 6);
    pts[5] = pts[1];
    CHECK(coboundary(pts).is_zero());
}

TEST_CASE("G-invariance holds exactly") {
    std::mt19937_64 rng(29);
    for (int n : {1, 2}) {
        // identity and pure rotations first
        CHECK(invariance_residual(ProductAutomorphism::identity(n),
                                  oracle::random_tuple(rng, n, 2 * n + 1))
                  .is_zero());
        std::vector<DiskAutomorphism> rots;
        for (int i = 0; i < n; ++i) rots.emplace_back(DiskPoint(), 0.7 + i);
        CHECK(invariance_residual(ProductAutomorphism(std::move(rots)),
                                  oracle::random_tuple(rng, n, 2 * n + 1))
                  .is_zero());

        for (int t = 0; t < 100; ++t) {
            const auto g = oracle::random_product_automorphism(rng, n);
            CHECK(invariance_residual(g, oracle::random_tuple(rng, n, 2 * n + 1)).is_zero());
        }
    }
    for (int t = 0; t < 10; ++t) {
        const auto g = oracle::random_product_automorphism(rng, 3);
        CHECK(invariance_residual(g, oracle::random_tuple(rng, 3, 7)).is_zero());
    }
}

TEST_CASE("tuple length validation") {
    std::mt19937_64 rng(30);
    CHECK_THROWS_AS(cocycle(oracle::random_tuple(rng, 2, 4)), std::invalid_argument);
    CHECK_THROWS_AS(coboundary(oracle::random_tuple(rng, 2, 5)), std::invalid_argument);
}

TEST_CASE("suitable permutation counts 2^n (2n+1)") {
    CHECK(suitable_permutations(1).size() == 6);
    CHECK(suitable_permutations(2).size() == 20);
    CHECK(suitable_permutations(3).size() == 56);
    CHECK(suitable_permutations(4).size() == 144);
    CHECK_THROWS_AS(suitable_permutations(5), std::invalid_argument);
}

TEST_CASE("suitable permutations satisfy the slot condition") {
    for (int n : {1, 2, 3}) {
        for (const auto& sp : suitable_permutations(n)) {
            for (int i = 1; i <= n; ++i) {
                for (int want : {2 * i - 1, 2 * i}) {
                    const bool found = sp.perm[static_cast<std::size_t>(2 * i - 2)] == want ||
                                       sp.perm[static_cast<std::size_t>(2 * i - 1)] == want ||
                                       sp.perm[static_cast<std::size_t>(2 * i)] == want;
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("exact rational arithmetic") {
    CHECK(ExactRational(2, 4) == ExactRational(1, 2));
    CHECK(ExactRational(1, -2) == ExactRational(-1, 2));
    CHECK((ExactRational(1, 3) + ExactRational(1, 6)) == ExactRational(1, 2));
    CHECK((ExactRational(1, 3) * ExactRational(3, 5)) == ExactRational(1, 5));
    CHECK((ExactRational(1, 2) - ExactRational(1, 2)).is_zero());
    CHECK(ExactRational(-5, 7).abs() == ExactRational(5, 7));
    CHECK(ExactRational(1, 2) < ExactRational(2, 3));
    CHECK(ExactRational(7, 2).str() == "7/2");
    CHECK(ExactRational(4).str() == "4");
    CHECK_THROWS_AS(ExactRational(1, 0), std::invalid_argument);
}
