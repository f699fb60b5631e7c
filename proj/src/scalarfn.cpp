#include "sinhmajor/scalarfn.hpp"

#include <cmath>
#include <stdexcept>

namespace sinhmajor {

namespace {

// sinh(y) overflows double a little above 710; stay clear of it.
constexpr double kDirectLimit = 700.0;

}  // namespace

double sinhc(double y) {
    y = std::fabs(y);
    if (y < 1e-2) {
        const double y2 = y * y;
        return 1.0 + y2 / 6.0 * (1.0 + y2 / 20.0 * (1.0 + y2 / 42.0));
    }
    return std::sinh(y) / y;
}

double log_sinhc(double y) {
    y = std::fabs(y);
    if (y == 0.0) return 0.0;
    if (y < 20.0) return std::log(sinhc(y));
    // sinh(y) = e^y (1 - e^{-2y}) / 2
    return y - std::log(2.0) + std::log1p(-std::exp(-2.0 * y)) - std::log(y);
}

double eval_h(std::span<const double> alpha, std::span<const double> beta, double x) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("eval_h: tuples have mismatched lengths");
    double largest = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        largest = std::max({largest, std::fabs(alpha[i] * x), std::fabs(beta[i] * x)});
    if (largest <= kDirectLimit) {
        double value = 1.0;
        for (std::size_t i = 0; i < alpha.size(); ++i) value *= sinhc(alpha[i] * x) / sinhc(beta[i] * x);
        return value;
    }
    double log_value = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        log_value += log_sinhc(alpha[i] * x) - log_sinhc(beta[i] * x);
    return std::exp(log_value);
}

double eval_h(const ExponentPairD& pair, double x) { return eval_h(pair.alpha, pair.beta, x); }

double eval_h(const ExponentPair& pair, double x) { return eval_h(to_double(pair), x); }

double eval_f(const ExponentPairD& pair, double t) {
    if (!(t > 0.0)) throw std::domain_error("eval_f: t must be positive");
    const double x = 0.5 * std::log(t);
    return std::sqrt(t) * eval_h(pair, x);
}

double eval_f(const ExponentPair& pair, double t) { return eval_f(to_double(pair), t); }

double eval_mean(const ExponentPairD& pair, double s, double t) {
    if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("eval_mean: arguments must be positive");
    const double x = 0.5 * (std::log(s) - std::log(t));
    return std::sqrt(s) * std::sqrt(t) * eval_h(pair, x);
}

double eval_mean(const ExponentPair& pair, double s, double t) {
    return eval_mean(to_double(pair), s, t);
}

}  // namespace sinhmajor
