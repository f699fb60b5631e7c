#pragma once

#include <Eigen/Dense>

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sinhmajor {

using RealFn = std::function<double(double)>;

/// [phi(x_i - x_j)]_{ij}; exact symmetry by filling only i <= j.
Eigen::MatrixXd gram_matrix(const RealFn& phi, std::span<const double> points);

/// Eigendecomposition of a symmetric (resp. Hermitian) matrix:
/// eigenvalues ascending, columns of `eigenvectors` orthonormal.
struct SymEigen {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};
struct HermEigen {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
};
SymEigen sym_eigen(const Eigen::MatrixXd& m);
HermEigen sym_eigen(const Eigen::MatrixXcd& m);

struct GramReport {
    std::vector<double> points;
    Eigen::MatrixXd matrix;
    double min_eigenvalue = 0.0;
    double determinant = 0.0;  // product of eigenvalues
    bool is_psd = false;
};

/// Gram matrix, spectrum and PSD verdict at tolerance `tol` (absolute on the
/// minimum eigenvalue, scaled by the matrix 1-norm).
GramReport gram_report(const RealFn& phi, std::span<const double> points, double tol = 1e-8);

struct GramWitness {
    std::vector<double> points;
    double min_eigenvalue = 0.0;
    double determinant = 0.0;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Searches arithmetic grids {0, d, 2d, ...} (spacings ascending, sizes
/// ascending, sizes 2..max_size) for a Gram matrix with an eigenvalue below
/// -tol * ||M||_1. Returns the first witness in enumeration order, or nothing.
std::optional<GramWitness> gram_probe(const RealFn& phi, std::span<const double> spacings,
                                      int max_size, double tol = 1e-8, Deadline deadline = {});

}  // namespace sinhmajor
