#include <doctest.h>

#include <cmath>

#include "sinhmajor/scalarfn.hpp"
#include "test_util.hpp"

using namespace sinhmajor;

namespace {

// direct (t^a - 1)/a form, cross-check only; log-convention at a = 0
double direct_f(const ExponentPairD& pair, double t) {
    double value = std::pow(t, pair.gamma());
    for (std::size_t i = 0; i < pair.size(); ++i) {
        const double a = pair.alpha[i];
        const double b = pair.beta[i];
        const double num = a == 0.0 ? std::log(t) : (std::pow(t, a) - 1.0) / a;
        const double den = b == 0.0 ? std::log(t) : (std::pow(t, b) - 1.0) / b;
        value *= num / den;
    }
    return value;
}

ExponentPairD random_pair(testutil::Rng& rng, int n) {
    TupleD alpha, beta;
    for (int i = 0; i < n; ++i) {
        alpha.push_back(rng.integer(1, 12) / static_cast<double>(rng.integer(1, 4)));
        beta.push_back(rng.integer(1, 12) / static_cast<double>(rng.integer(1, 4)));
    }
    return ExponentPairD(alpha, beta);
}

}  // namespace

TEST_CASE("sinhc") {
    CHECK(sinhc(0.0) == 1.0);
    CHECK(sinhc(1.0) == doctest::Approx(1.1752011936438014).epsilon(1e-15));
    CHECK(sinhc(-2.7) == sinhc(2.7));
    // series branch agrees with the direct ratio near the switch point
    CHECK(sinhc(0.009) == doctest::Approx(std::sinh(0.009) / 0.009).epsilon(1e-15));
    CHECK(sinhc(0.011) == doctest::Approx(1.0 + 0.011 * 0.011 / 6.0 * (1.0 + 0.011 * 0.011 / 20.0))
                              .epsilon(1e-15));
    // log_sinhc agrees with the direct value below overflow and stays finite above
    CHECK(log_sinhc(3.0) == doctest::Approx(std::log(sinhc(3.0))).epsilon(1e-14));
    CHECK(std::isfinite(log_sinhc(5000.0)));
    CHECK(log_sinhc(5000.0) == doctest::Approx(5000.0 - std::log(2.0) - std::log(5000.0)));
}

TEST_CASE("eval_f examples") {
    CHECK(eval_f(ExponentPair({1}, {1}), 4.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eval_f(ExponentPair({2}, {1}), 3.0) == doctest::Approx(2.0).epsilon(1e-14));
    // logarithmic mean (t - 1)/log t at t = e
    CHECK(eval_f(ExponentPairD({1}, {0}), std::exp(1.0)) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(eval_f(ExponentPair({8, 6, 3}, {9, 4, 4}), 1.0) == 1.0);
    CHECK_THROWS_AS(eval_f(ExponentPair({1}, {1}), -2.0), std::domain_error);
}

TEST_CASE("eval_h Example 2.9 values") {
    const ExponentPair pair({8, 6, 3}, {9, 4, 4});
    CHECK(eval_h(pair, 1.0 / 3.0) == doctest::Approx(0.9780192940).epsilon(1e-9));
    CHECK(eval_h(pair, 2.0 / 3.0) == doctest::Approx(0.9908829679).epsilon(1e-9));
    CHECK(eval_h(pair, 1.0) == doctest::Approx(0.9981846167).epsilon(1e-9));
    CHECK(eval_h(pair, 0.0) == 1.0);
}

TEST_CASE("eval_mean examples") {
    CHECK(eval_mean(ExponentPair({1}, {1}), 4.0, 9.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(eval_mean(ExponentPair({2}, {1}), 2.0, 4.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(eval_mean(ExponentPairD({1}, {0}), 1.0, std::exp(1.0)) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(eval_mean(ExponentPair({1}, {1}), 7.0, 7.0) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("symmetry f(t) = t f(1/t)") {
    testutil::Rng rng(101);
    for (int round = 0; round < 25; ++round) {
        const ExponentPairD pair = random_pair(rng, rng.integer(1, 4));
        for (int k = -6; k <= 6; ++k) {
            const double t = std::pow(10.0, k);
            const double lhs = eval_f(pair, t);
            const double rhs = t * eval_f(pair, 1.0 / t);
            CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(lhs));
        }
    }
}

TEST_CASE("sign invariance f_{alpha,beta} = f_{|alpha|,|beta|}") {
    testutil::Rng rng(102);
    for (int round = 0; round < 25; ++round) {
        ExponentPairD pair = random_pair(rng, rng.integer(1, 4));
        ExponentPairD flipped = pair;
        for (auto& v : flipped.alpha)
            if (rng.integer(0, 1)) v = -v;
        for (auto& v : flipped.beta)
            if (rng.integer(0, 1)) v = -v;
        const double t = std::exp(rng.real(-3.0, 3.0));
        CHECK(eval_f(flipped, t) == doctest::Approx(eval_f(pair, t)).epsilon(1e-14));
    }
}

TEST_CASE("consistency f(e^{2x}) = e^x h(x)") {
    testutil::Rng rng(103);
    for (int round = 0; round < 25; ++round) {
        const ExponentPairD pair = random_pair(rng, rng.integer(1, 4));
        for (double x : {-20.0, -3.0, -0.5, 1e-7, 0.25, 2.0, 20.0}) {
            const double f = eval_f(pair, std::exp(2.0 * x));
            const double h = std::exp(x) * eval_h(pair, x);
            CHECK(std::fabs(f - h) <= 1e-12 * std::fabs(f));
        }
    }
}

TEST_CASE("cross-check against the direct power-ratio form") {
    testutil::Rng rng(104);
    for (int round = 0; round < 25; ++round) {
        const ExponentPairD pair = random_pair(rng, rng.integer(1, 3));
        for (double t : {0.37, 2.0, 5.25}) {
            CHECK(eval_f(pair, t) == doctest::Approx(direct_f(pair, t)).epsilon(1e-10));
        }
    }
    // zero-exponent convention against the explicit log form
    const ExponentPairD logpair({0.0, 2.0}, {1.0, 0.0});
    CHECK(eval_f(logpair, 3.0) == doctest::Approx(direct_f(logpair, 3.0)).epsilon(1e-12));
}

TEST_CASE("homogeneity of the mean") {
    testutil::Rng rng(105);
    for (int round = 0; round < 25; ++round) {
        const ExponentPairD pair = random_pair(rng, rng.integer(1, 4));
        const double s = std::exp(rng.real(-2.0, 2.0));
        const double t = std::exp(rng.real(-2.0, 2.0));
        const double base = eval_mean(pair, s, t);
        for (double c : {1e-3, 1.0, 1e3}) {
            CHECK(std::fabs(eval_mean(pair, c * s, c * t) - c * base) <= 1e-13 * c * base);
        }
        CHECK(eval_mean(pair, t, s) == doctest::Approx(base).epsilon(1e-14));
    }
}

TEST_CASE("h is even bitwise") {
    testutil::Rng rng(106);
    for (int round = 0; round < 50; ++round) {
        const ExponentPairD pair = random_pair(rng, rng.integer(1, 4));
        const double x = rng.real(-30.0, 30.0);
        CHECK(eval_h(pair, x) == eval_h(pair, -x));
    }
}

TEST_CASE("overflow-safe far from the origin") {
    const ExponentPairD pair({3.0}, {1.0});
    const double big = eval_h(pair, 300.0);  // sinh(900) overflows doubles
    CHECK(std::isfinite(big));
    CHECK(big > 1e250);
    const ExponentPairD decaying({1.0}, {3.0});
    CHECK(eval_h(decaying, 300.0) == doctest::Approx(1.0 / big).epsilon(1e-12));
    CHECK(eval_h(decaying, 2000.0) >= 0.0);  // graceful underflow
}
