#include "sinhmajor/matmeans.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "sinhmajor/gram.hpp"
#include "sinhmajor/scalarfn.hpp"

namespace sinhmajor {

namespace {

// uniform doubles on [-1, 1] built from raw mt19937_64 bits, so streams are
// identical across standard library implementations
class UniformSource {
public:
    UniformSource(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{seed, stream};
        engine_.seed(seq);
    }
    double next() {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return 2.0 * unit - 1.0;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

PosDefMatrix::PosDefMatrix(Eigen::MatrixXcd m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw std::domain_error("PosDefMatrix: matrix must be square");
    const double scale = matrix_.norm();
    if ((matrix_ - matrix_.adjoint()).norm() > 1e-13 * std::max(1.0, scale))
        throw std::domain_error("PosDefMatrix: matrix is not Hermitian");
    const HermEigen eig = sym_eigen(matrix_);
    if (eig.eigenvalues(0) <= 0.0)
        throw std::domain_error("PosDefMatrix: matrix is not positive definite");
    eigenvalues_ = eig.eigenvalues;
    eigenvectors_ = eig.eigenvectors;
}

Eigen::MatrixXcd mean_apply(const ExponentPairD& pair, const PosDefMatrix& h,
                            const PosDefMatrix& k, const Eigen::MatrixXcd& x) {
    if (h.dim() != x.rows() || k.dim() != x.cols())
        throw std::domain_error("mean_apply: dimension mismatch");
    const Eigen::MatrixXcd& u = h.eigenvectors();
    const Eigen::MatrixXcd& v = k.eigenvectors();
    Eigen::MatrixXcd z = u.adjoint() * x * v;
    for (Eigen::Index i = 0; i < h.dim(); ++i)
        for (Eigen::Index j = 0; j < k.dim(); ++j)
            z(i, j) *= eval_mean(pair, h.eigenvalues()(i), k.eigenvalues()(j));
    return u * z * v.adjoint();
}

Eigen::MatrixXcd mean_apply(const ExponentPair& pair, const PosDefMatrix& h,
                            const PosDefMatrix& k, const Eigen::MatrixXcd& x) {
    return mean_apply(to_double(pair), h, k, x);
}

KyFanNorms ky_fan_norms(const Eigen::MatrixXcd& x) {
    const Eigen::MatrixXcd product = x.adjoint() * x;
    const HermEigen eig = sym_eigen(product);
    const Eigen::Index n = eig.eigenvalues.size();
    KyFanNorms out;
    out.singular_values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i)
        out.singular_values(i) = std::sqrt(std::max(0.0, eig.eigenvalues(n - 1 - i)));
    out.ky_fan.resize(static_cast<std::size_t>(n));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        acc += out.singular_values(i);
        out.ky_fan[static_cast<std::size_t>(i)] = acc;
    }
    out.frobenius = out.singular_values.norm();
    return out;
}

Eigen::MatrixXcd random_matrix(int n, std::uint64_t seed, std::uint64_t stream) {
    UniformSource source(seed, stream);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = source.next();
            const double im = source.next();
            m(i, j) = std::complex<double>(re, im);
        }
    }
    return m;
}

Eigen::MatrixXcd random_pd_matrix(int n, std::uint64_t seed, std::uint64_t stream) {
    const Eigen::MatrixXcd a = random_matrix(n, seed, stream);
    return a * a.adjoint() + 1e-3 * Eigen::MatrixXcd::Identity(n, n);
}

VerifyReport verify_inequality(const ExponentPair& lhs, const ExponentPair& rhs, int n, int trials,
                               std::uint64_t seed) {
    if (n < 1 || trials < 1) throw std::invalid_argument("verify_inequality: n, trials >= 1");
    VerifyReport report;
    const auto [top, bottom] = combined_pair_tuples(lhs, rhs);
    report.exploratory = !weak_submajorize(top, bottom);

    const ExponentPairD lhs_d = to_double(lhs);
    const ExponentPairD rhs_d = to_double(rhs);
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t base = static_cast<std::uint64_t>(trial) * 3;
        const PosDefMatrix h(random_pd_matrix(n, seed, base));
        const PosDefMatrix k(random_pd_matrix(n, seed, base + 1));
        const Eigen::MatrixXcd x = random_matrix(n, seed, base + 2);

        const KyFanNorms ln = ky_fan_norms(mean_apply(lhs_d, h, k, x));
        const KyFanNorms rn = ky_fan_norms(mean_apply(rhs_d, h, k, x));

        MeanTrialReport trial_report;
        trial_report.seed = seed;
        trial_report.trial = trial;
        trial_report.n = n;
        trial_report.lhs_norms = ln.ky_fan;
        trial_report.lhs_norms.push_back(ln.frobenius);
        trial_report.rhs_norms = rn.ky_fan;
        trial_report.rhs_norms.push_back(rn.frobenius);
        trial_report.pass = true;
        trial_report.margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < trial_report.lhs_norms.size(); ++i) {
            const double l = trial_report.lhs_norms[i];
            const double r = trial_report.rhs_norms[i];
            if (l > r * (1.0 + 1e-10)) trial_report.pass = false;
            if (r > 0.0) trial_report.margin = std::min(trial_report.margin, (r - l) / r);
        }
        if (!trial_report.pass) ++report.failures;
        report.trials.push_back(std::move(trial_report));
    }
    return report;
}

}  // namespace sinhmajor
