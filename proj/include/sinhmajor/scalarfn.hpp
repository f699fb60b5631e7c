#pragma once

#include <span>

#include "sinhmajor/exponents.hpp"

namespace sinhmajor {

/// sinh(y)/y with the removable singularity filled in; even in y.
double sinhc(double y);

/// log(sinh(|y|)/|y|), overflow-free for large |y|; 0 at y = 0.
double log_sinhc(double y);

/// h(x) = prod_i sinhc(a_i x)/sinhc(b_i x)
///      = prod_i b_i sinh(a_i x) / (a_i sinh(b_i x)),
/// with zero exponents contributing the sinh(a x)/(a x) -> 1 limit.
/// Even in x (bitwise), h(0) = 1 exactly.
double eval_h(std::span<const double> alpha, std::span<const double> beta, double x);
double eval_h(const ExponentPairD& pair, double x);
double eval_h(const ExponentPair& pair, double x);

/// f_{alpha,beta}(t) = sqrt(t) * h(log(t)/2) for t > 0; f(1) = 1 exactly.
double eval_f(const ExponentPairD& pair, double t);
double eval_f(const ExponentPair& pair, double t);

/// M_{alpha,beta}(s,t) = sqrt(s t) * h((log s - log t)/2); symmetric,
/// homogeneous of degree 1.
double eval_mean(const ExponentPairD& pair, double s, double t);
double eval_mean(const ExponentPair& pair, double s, double t);

}  // namespace sinhmajor
