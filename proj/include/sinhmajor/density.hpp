#pragma once

#include <span>
#include <vector>

#include "sinhmajor/exponents.hpp"
#include "sinhmajor/factorizer.hpp"

namespace sinhmajor {

/// One signed Kosaki term
///   sign * sinh((1/a - 1/b) pi t / 2) / (2 t sinh(pi t / 2a) sinh(pi t / 2b)),
/// the Kolmogorov-representation density of sign * log(b sinh(a x)/(a sinh(b x))).
/// Even in t; t^2 * value(t) -> sign * (b - a)/pi as t -> 0.
struct DensityTerm {
    double a = 1.0;
    double b = 1.0;
    int sign = 1;

    double value(double t) const;     // 1/t^2 singular at 0 unless a == b
    double t2_value(double t) const;  // smooth everywhere, exponentially decaying
};

/// Bare density of log(b sinh(a x)/(a sinh(b x))); nonnegative everywhere
/// when a <= b.
double kosaki_density(double a, double b, double t);

struct CombinedDensity {
    std::vector<DensityTerm> terms;
    bool regularized = false;  // the 1/t^2 coefficients cancel exactly

    double value(double t) const;
    double t2_value(double t) const;
};

struct DensityPairing {
    double a = 1.0;
    double b = 1.0;
    int sign = 1;
};

CombinedDensity combined_density(std::span<const DensityPairing> pairing);

/// Slot-sorted default pairing (a_i -> b_i on the abs-normalized pair),
/// skipping a_i == b_i slots.
CombinedDensity density_for_pair(const ExponentPairD& pair);

/// Density of one Lemma-style quad factor: terms pairing each numerator with
/// one denominator; regularized because a + c = b + d.
CombinedDensity density_for_quad(const ElementaryFactor& quad);

struct GridCheck {
    bool nonneg = false;
    double min_value = 0.0;
    double min_location = 0.0;
};

/// Minimum of t^2 * density over a symmetric log-spaced grid on [-t_max, t_max]
/// (plus t = 0); nonneg iff the minimum is >= -1e-12 * max |t^2 density|.
GridCheck check_nonneg_grid(const CombinedDensity& d, double t_max, int n_points);

/// log h(x) = integral of (cos(x t) - 1) * density(t) dt over the real line,
/// computed as 2 * int_0^T (cos(x t) - 1)/t^2 * (t^2 density)(t) dt with T from
/// the exponential tail bound. Throws on quadrature failure.
double reconstruct_log_h(const CombinedDensity& d, double x, double tol = 1e-9);

}  // namespace sinhmajor
