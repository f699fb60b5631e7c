// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sinhmajor/classifier.hpp"
#include "sinhmajor/density.hpp"
#include "sinhmajor/expander.hpp"
#include "sinhmajor/factorizer.hpp"
#include "sinhmajor/gram.hpp"
#include "sinhmajor/matmeans.hpp"
#include "sinhmajor/scalarfn.hpp"

using namespace sinhmajor;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void run(int id, const std::string& name, double limit_ms,
         const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= limit_ms)
        outcome.require(false, "runtime " + std::to_string(elapsed) + " ms over the " +
                                   std::to_string(limit_ms) + " ms limit");
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f ms)%s%s\n", outcome.pass ? "PASS" : "FAIL", id,
                name.c_str(), elapsed, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// deterministic uniforms for the sampled-point criteria
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}
    double real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
    }
    int integer(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

std::pair<TupleQ, TupleQ> sample_submajorized_pair(Sampler& rng, int n) {
    TupleQ beta;
    for (int i = 0; i < n; ++i) beta.push_back(Rational(rng.integer(1, 12), rng.integer(1, 6)));
    beta = abs_normalize(beta);
    TupleQ alpha;
    Rational sum_alpha = 0, sum_beta = 0, prev = 0;
    for (int k = 0; k < n; ++k) {
        sum_beta += beta[static_cast<std::size_t>(k)];
        Rational cap = sum_beta - sum_alpha;
        if (k > 0 && prev < cap) cap = prev;
        const int q = rng.integer(1, 4);
        const Rational a = cap * Rational(rng.integer(1, q), q);
        alpha.push_back(a);
        sum_alpha += a;
        prev = a;
    }
    return {alpha, beta};
}

void criterion_1(Outcome& out) {
    const ExponentPairD pair({8, 6, 3}, {9, 4, 4});
    eval_h(pair, 0.5);  // warm up before timing the three target evaluations
    const double want[] = {0.9780192940, 0.9908829679, 0.9981846167};
    const double xs[] = {1.0 / 3.0, 2.0 / 3.0, 1.0};
    for (int i = 0; i < 3; ++i) {
        const double got = eval_h(pair, xs[i]);
        out.require(std::fabs(got - want[i]) <= 1e-9,
                    "h(" + std::to_string(xs[i]) + ") = " + std::to_string(got));
    }
}

void criterion_2(Outcome& out) {
    const ExponentPairD pair({8, 6, 3}, {9, 4, 4});
    const double points[] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
    const GramReport report =
        gram_report([&](double x) { return eval_h(pair, x); }, points);
    out.require(std::fabs(report.determinant - (-0.0000095)) <= 1e-7,
                "determinant " + std::to_string(report.determinant));
    out.require(report.min_eigenvalue < 0.0, "minimum eigenvalue is not negative");
}

void criterion_3(Outcome& out) {
    const auto terms = density_numerator_terms({8, 6, 1}, {9, 4, 4});
    const auto rescaled = rescale_to_integers(terms);
    const CoshExpansion e = expand(rescaled.terms);
    const std::map<Rational, Rational> expected{
        {103, Rational(1, 8)},  {83, Rational(2, 8)},  {77, Rational(2, 8)},
        {49, Rational(2, 8)},   {43, Rational(2, 8)},  {101, Rational(-1, 8)},
        {95, Rational(-1, 8)},  {67, Rational(-3, 8)}, {65, Rational(-1, 8)},
        {61, Rational(-1, 8)},  {59, Rational(-1, 8)}, {25, Rational(-1, 8)},
    };
    out.require(e.terms == expected, "expansion differs from the 12-term list");
    const PositivityCertificate cert = certify_nonnegative(e, 9);
    out.require(cert.verdict == CertVerdict::Certified, "not certified at K = 9");
    for (unsigned k = 0; k <= 8; ++k)
        out.require(taylor_coefficient(e, k) >= 0, "c_" + std::to_string(k) + " < 0");
    const Rational ratio = 8 * taylor_coefficient(e, 9) / rational_pow(Rational(103), 18);
    out.require(ratio >= Rational(6, 100),
                "c_9 / 103^18 = " + std::to_string(to_double(ratio)));
}

void criterion_4(Outcome& out) {
    struct Case {
        TupleQ alpha, beta;
        std::vector<ElementaryFactorQ> published;
    };
    const Case cases[] = {
        {{6, 5, 3},
         {9, 4, 1},
         {ElementaryFactorQ::quad(6, 3, 1, 8), ElementaryFactorQ::quad(5, 8, 4, 9)}},
        {{7, 5, 4},
         {9, 6, 1},
         {ElementaryFactorQ::quad(7, 5, 3, 9), ElementaryFactorQ::quad(4, 3, 1, 6)}},
    };
    for (const auto& c : cases) {
        const ExponentPairD pair(to_double(c.alpha), to_double(c.beta));
        const auto reconstruction_ok = [&](const FactorizationQ& f) {
            for (int i = 0; i <= 100; ++i) {
                const double x = -5.0 + 0.1 * i;
                if (x == 0.0) continue;
                const double direct = eval_h(pair, x);
                if (std::fabs(factorization_value(f, x) - direct) > 1e-11 * direct) return false;
            }
            return true;
        };
        out.require(reconstruction_ok(factorize(c.alpha, c.beta)),
                    "computed factorization fails reconstruction");
        out.require(reconstruction_ok({c.published, ExponentPair(c.alpha, c.beta)}),
                    "published factor list fails reconstruction");
    }
}

void criterion_5(Outcome& out) {
    const VerifyReport report =
        verify_inequality(ExponentPair({1}, {1}), ExponentPair({2}, {1}), 3, 100, 42);
    out.require(report.failures == 0,
                std::to_string(report.failures) + " trial failures");
    out.require(!report.exploratory, "combined tuples unexpectedly fail submajorization");

    for (int round = 0; round < 5; ++round) {
        const int n = 3;
        const PosDefMatrix h(random_pd_matrix(n, 42, 900 + 3 * static_cast<std::uint64_t>(round)));
        const PosDefMatrix k(
            random_pd_matrix(n, 42, 900 + 3 * static_cast<std::uint64_t>(round) + 1));
        const Eigen::MatrixXcd x =
            random_matrix(n, 42, 900 + 3 * static_cast<std::uint64_t>(round) + 2);
        const double scale = x.norm() * std::max(h.matrix().norm(), k.matrix().norm());
        const Eigen::MatrixXcd arithmetic = mean_apply(ExponentPairD({2}, {1}), h, k, x);
        out.require(((h.matrix() * x + x * k.matrix()) * 0.5 - arithmetic).cwiseAbs().maxCoeff() <=
                        1e-12 * scale,
                    "arithmetic-mean identity violated");
        const Eigen::MatrixXcd geometric = mean_apply(ExponentPairD({1}, {1}), h, k, x);
        const Eigen::MatrixXcd hr = h.eigenvectors() *
                                    h.eigenvalues().cwiseSqrt().cast<std::complex<double>>()
                                        .asDiagonal() *
                                    h.eigenvectors().adjoint();
        const Eigen::MatrixXcd kr = k.eigenvectors() *
                                    k.eigenvalues().cwiseSqrt().cast<std::complex<double>>()
                                        .asDiagonal() *
                                    k.eigenvectors().adjoint();
        out.require((hr * x * kr - geometric).cwiseAbs().maxCoeff() <= 1e-12 * scale,
                    "geometric-mean identity violated");
    }
}

void criterion_6(Outcome& out) {
    const VerifyReport report = verify_inequality(ExponentPair({8, 7, 3}, {10, 6, 4}),
                                                  ExponentPair({9, 2}, {8, 5}), 4, 100, 42);
    out.require(report.failures == 0, std::to_string(report.failures) + " trial failures");
    out.require(!report.exploratory, "combined tuples unexpectedly fail submajorization");
}

void criterion_7(Outcome& out) {
    // exhaustive agreement on the half-integer grid
    int mismatches = 0;
    for (int ia = 0; ia <= 8; ++ia)
        for (int ib = 0; ib <= 8; ++ib)
            for (int ic = 0; ic <= 8; ++ic)
                for (int id = 0; id <= 8; ++id) {
                    const double a = ia * 0.5, b = ib * 0.5, c = ic * 0.5, d = id * 0.5;
                    const bool region = classify_single(a, b, c, d);
                    const bool criterion = two_factor_criterion(
                        std::max(a, d), std::min(a, d), std::max(b, c), std::min(b, c));
                    if (region != criterion) ++mismatches;
                }
    out.require(mismatches == 0, std::to_string(mismatches) + " grid mismatches");

    Sampler rng(1207);
    const double spacings[] = {1.0 / 3.0, 0.5, 1.0, 2.0};
    // 50 points strictly inside the dominance region: no Gram witness may exist
    int inside_checked = 0;
    while (inside_checked < 50) {
        const double a = rng.integer(0, 8) * 0.5, b = rng.integer(0, 8) * 0.5;
        const double c = rng.integer(0, 8) * 0.5, d = rng.integer(0, 8) * 0.5;
        const bool inside =
            a > b ? (c >= a + 0.25 && d <= c - a + b - 0.25)
                  : (d <= c - 0.25 || (d <= c - a + b - 0.25 && d <= b - 0.25));
        if (!inside) continue;
        ++inside_checked;
        const ExponentPairD pair({a, d}, {b, c});
        if (gram_probe([&](double x) { return eval_h(pair, x); }, spacings, 16)) {
            out.require(false, "witness found strictly inside at a=" + std::to_string(a) +
                                   " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                                   " d=" + std::to_string(d));
            break;
        }
    }
    // 50 points strictly outside: the sum-violating subset must be refuted
    int outside_checked = 0;
    while (outside_checked < 50) {
        const double a = rng.integer(0, 8) * 0.5, b = rng.integer(0, 8) * 0.5;
        const double c = rng.integer(0, 8) * 0.5, d = rng.integer(0, 8) * 0.5;
        const bool sum_violating = a + d >= b + c + 0.25;
        const bool max_violating = std::max(a, d) >= std::max(b, c) + 0.25;
        if (!sum_violating && !max_violating) continue;
        ++outside_checked;
        const TupleQ alpha{Rational(static_cast<int>(a * 2), 2),
                           Rational(static_cast<int>(d * 2), 2)};
        const TupleQ beta{Rational(static_cast<int>(b * 2), 2),
                          Rational(static_cast<int>(c * 2), 2)};
        const Classification verdict = classify(alpha, beta);
        if (sum_violating) {
            out.require(verdict.verdict == Verdict::NotPositiveDefinite,
                        "sum-violating point not refuted");
        }
        // max-violating points with positive entries fall to the max test
        if (!sum_violating && a > 0 && b > 0 && c > 0 && d > 0) {
            out.require(verdict.verdict == Verdict::NotPositiveDefinite,
                        "max-violating point not refuted");
        }
    }
}

void criterion_8(Outcome& out) {
    Sampler rng(1208);
    for (int round = 0; round < 30; ++round) {
        const auto [alpha, beta] = sample_submajorized_pair(rng, rng.integer(1, 4));
        const ExponentPairD pair(to_double(alpha), to_double(beta));
        for (double r : {0.5, 1.0, 2.0}) {
            const int n = rng.integer(2, 6);
            std::vector<double> points;
            for (int i = 0; i < n; ++i) points.push_back(rng.real(-4.0, 4.0));
            const Eigen::MatrixXd m = gram_matrix(
                [&](double x) { return std::pow(eval_h(pair, x), r); }, points);
            const double min_eig = sym_eigen(m).eigenvalues(0);
            out.require(min_eig >= -1e-9 * n,
                        "min eigenvalue " + std::to_string(min_eig) + " at r = " +
                            std::to_string(r));
        }
    }
}

void criterion_9(Outcome& out) {
    const DensityPairing triple[] = {{8, 9, 1}, {4, 6, -1}, {1, 4, 1}};
    const CombinedDensity density = combined_density(triple);
    const ExponentPairD pair({8, 6, 1}, {9, 4, 4});
    for (double x : {0.25, 0.5, 1.0, 2.0}) {
        const double got = reconstruct_log_h(density, x);
        const double want = std::log(eval_h(pair, x));
        out.require(std::fabs(got - want) <= 1e-6,
                    "triple at x = " + std::to_string(x) + ": err " +
                        std::to_string(std::fabs(got - want)));
    }
    const auto quad = ElementaryFactorQ::quad(6, 3, 1, 8);
    const CombinedDensity quad_density = density_for_quad(to_double(quad));
    for (double x : {0.25, 0.5, 1.0, 2.0}) {
        const double got = reconstruct_log_h(quad_density, x);
        const double want = std::log(factor_value(quad, x));
        out.require(std::fabs(got - want) <= 1e-6,
                    "quad at x = " + std::to_string(x) + ": err " +
                        std::to_string(std::fabs(got - want)));
    }
}

void criterion_10(Outcome& out) {
    const Classification sum = classify({3}, {1});
    out.require(sum.verdict == Verdict::NotPositiveDefinite && sum.rule == Rule::SumTest,
                "classify((3),(1)) did not fire the sum test");
    const Classification max = classify({3, 1}, {2, 2});
    out.require(max.verdict == Verdict::NotPositiveDefinite && max.rule == Rule::MaxTest,
                "classify((3,1),(2,2)) did not fire the max test");
    const VerifyReport report =
        verify_inequality(ExponentPair({3}, {1}), ExponentPair({1}, {1}), 2, 200, 42);
    out.require(report.exploratory, "reversed pair not labeled exploratory");
    out.require(report.failures > 0, "no norm violation found in 200 trials");
}

}  // namespace

int main() {
    run(1, "h values of the 4x4 counterexample kernel", 1.0, criterion_1);
    run(2, "counterexample Gram determinant and eigenvalue", 10.0, criterion_2);
    run(3, "exact cosh expansion and positivity certificate", 1000.0, criterion_3);
    run(4, "constructive factorizations and published lists", 10.0, criterion_4);
    run(5, "arithmetic-geometric mean inequality, 100 seeded trials", 1000.0, criterion_5);
    run(6, "five-exponent deletion inequality, 100 seeded trials", 2000.0, criterion_6);
    run(7, "single-pair region grid and Gram consistency", 60000.0, criterion_7);
    run(8, "fractional powers of certified kernels stay PSD", 30000.0, criterion_8);
    run(9, "density reconstruction of log h", 5000.0, criterion_9);
    run(10, "negative controls", 5000.0, criterion_10);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
