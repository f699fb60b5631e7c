#include "sinhmajor/gram.hpp"

#include <cmath>
#include <stdexcept>

namespace sinhmajor {

Eigen::MatrixXd gram_matrix(const RealFn& phi, std::span<const double> points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    if (n == 0) throw std::invalid_argument("gram_matrix: need at least one point");
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double value = phi(points[static_cast<std::size_t>(i)] -
                                     points[static_cast<std::size_t>(j)]);
            if (!std::isfinite(value))
                throw std::runtime_error("gram_matrix: non-finite function value");
            m(i, j) = value;
            m(j, i) = value;
        }
    }
    return m;
}

SymEigen sym_eigen(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sym_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

HermEigen sym_eigen(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sym_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

GramReport gram_report(const RealFn& phi, std::span<const double> points, double tol) {
    GramReport report;
    report.points.assign(points.begin(), points.end());
    report.matrix = gram_matrix(phi, points);
    const SymEigen eig = sym_eigen(report.matrix);
    report.min_eigenvalue = eig.eigenvalues(0);
    report.determinant = eig.eigenvalues.prod();
    const double scale = report.matrix.cwiseAbs().colwise().sum().maxCoeff();
    report.is_psd = report.min_eigenvalue >= -tol * scale;
    return report;
}

std::optional<GramWitness> gram_probe(const RealFn& phi, std::span<const double> spacings,
                                      int max_size, double tol, Deadline deadline) {
    if (max_size > 32) throw std::invalid_argument("gram_probe: max_size must be <= 32");
    for (double spacing : spacings) {
        for (int size = 2; size <= max_size; ++size) {
            if (deadline && std::chrono::steady_clock::now() > *deadline) return std::nullopt;
            std::vector<double> points(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) points[static_cast<std::size_t>(i)] = spacing * i;
            const GramReport report = gram_report(phi, points, tol);
            if (!report.is_psd)
                return GramWitness{std::move(points), report.min_eigenvalue, report.determinant};
        }
    }
    return std::nullopt;
}

}  // namespace sinhmajor
