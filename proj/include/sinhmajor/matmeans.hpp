#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "sinhmajor/exponents.hpp"

namespace sinhmajor {

/// Hermitian positive definite matrix with its spectral decomposition cached.
class PosDefMatrix {
public:
    explicit PosDefMatrix(Eigen::MatrixXcd m);

    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }  // ascending, all > 0
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    Eigen::MatrixXcd matrix_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// M_{alpha,beta}(L_H, R_K) X on eigenbases: with H = U diag(l) U* and
/// K = V diag(m) V*, returns U [ (M(l_i, m_j))_{ij} o (U* X V) ] V*.
/// Linear in X; H = K = cI gives c X.
Eigen::MatrixXcd mean_apply(const ExponentPairD& pair, const PosDefMatrix& h,
                            const PosDefMatrix& k, const Eigen::MatrixXcd& x);
Eigen::MatrixXcd mean_apply(const ExponentPair& pair, const PosDefMatrix& h,
                            const PosDefMatrix& k, const Eigen::MatrixXcd& x);

/// Singular values (descending, from the spectrum of X*X) and the norms they
/// determine: Ky Fan k = sum of the k largest singular values; the operator
/// norm is Ky Fan 1, the trace norm Ky Fan N, Frobenius reported separately.
struct KyFanNorms {
    Eigen::VectorXd singular_values;
    std::vector<double> ky_fan;
    double frobenius = 0.0;

    double operator_norm() const { return ky_fan.front(); }
    double trace_norm() const { return ky_fan.back(); }
};

KyFanNorms ky_fan_norms(const Eigen::MatrixXcd& x);

struct MeanTrialReport {
    std::uint64_t seed = 0;
    int trial = 0;
    int n = 0;
    std::vector<double> lhs_norms;  // ky fan 1..N then Frobenius
    std::vector<double> rhs_norms;
    bool pass = false;
    double margin = 0.0;  // min over norms of (rhs - lhs)/rhs
};

struct VerifyReport {
    bool exploratory = false;  // combined tuples failed weak submajorization
    int failures = 0;
    std::vector<MeanTrialReport> trials;
};

/// Seeded trials of ||| M_L(L_H,R_K)X ||| <= ||| M_R(L_H,R_K)X ||| over random
/// complex H, K > 0 and X, across all Ky Fan norms and Frobenius. Per-trial
/// RNG streams are derived from (seed, trial), so reports are deterministic.
VerifyReport verify_inequality(const ExponentPair& lhs, const ExponentPair& rhs, int n, int trials,
                               std::uint64_t seed);

/// Deterministic random inputs used by the verifier (exposed for tests):
/// entries uniform on [-1,1] (real and imaginary parts); PD matrices are
/// A A* + 1e-3 I.
Eigen::MatrixXcd random_matrix(int n, std::uint64_t seed, std::uint64_t stream);
Eigen::MatrixXcd random_pd_matrix(int n, std::uint64_t seed, std::uint64_t stream);

}  // namespace sinhmajor
