#include "sinhmajor/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sinhmajor/scalarfn.hpp"

namespace sinhmajor {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point Gauss
// rule (QUADPACK QK15 constants).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    double kronrod = 0.0;
    double error = 0.0;
};

template <class F>
PanelEstimate gk15(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double offset = half * kKronrodNodes[i];
        const double fsum = i == 7 ? f(center) : f(center - offset) + f(center + offset);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    // |K - G| is a conservative bound for the Kronrod error on smooth panels
    return {kronrod, std::fabs(kronrod - gauss) + 1e-300};
}

template <class F>
double integrate_adaptive(const F& f, double lo, double hi, double tol) {
    struct Panel {
        double lo, hi;
        PanelEstimate est;
    };
    std::vector<Panel> panels;
    const int initial = 8;
    for (int i = 0; i < initial; ++i) {
        const double a = lo + (hi - lo) * i / initial;
        const double b = lo + (hi - lo) * (i + 1) / initial;
        panels.push_back({a, b, gk15(f, a, b)});
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].est.kronrod;
            err += panels[i].est.error;
            if (panels[i].est.error > panels[worst].est.error) worst = i;
        }
        if (err <= tol * std::max(1.0, std::fabs(total))) return total;
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.lo + p.hi);
        panels[worst] = {p.lo, mid, gk15(f, p.lo, mid)};
        panels.push_back({mid, p.hi, gk15(f, mid, p.hi)});
    }
    throw std::runtime_error("reconstruct_log_h: quadrature did not reach the requested tolerance");
}

}  // namespace

double DensityTerm::t2_value(double t) const {
    if (a == b) return 0.0;
    const double wa = kPi / (2.0 * a);
    const double wb = kPi / (2.0 * b);
    const double wd = std::fabs(wa - wb);
    const double lead = sign * (b - a) / kPi;
    const double largest = std::fabs(t) * std::max({wa, wb, wd});
    if (largest <= 600.0) return lead * sinhc(wd * t) / (sinhc(wa * t) * sinhc(wb * t));
    return lead * std::exp(log_sinhc(wd * t) - log_sinhc(wa * t) - log_sinhc(wb * t));
}

double DensityTerm::value(double t) const {
    if (a == b) return 0.0;
    return t2_value(t) / (t * t);
}

double kosaki_density(double a, double b, double t) { return DensityTerm{a, b, 1}.value(t); }

double CombinedDensity::value(double t) const {
    double sum = 0.0;
    for (const auto& term : terms) sum += term.value(t);
    return sum;
}

double CombinedDensity::t2_value(double t) const {
    double sum = 0.0;
    for (const auto& term : terms) sum += term.t2_value(t);
    return sum;
}

CombinedDensity combined_density(std::span<const DensityPairing> pairing) {
    CombinedDensity out;
    double lead = 0.0;
    double lead_scale = 0.0;
    for (const auto& p : pairing) {
        if (!(p.a > 0.0) || !(p.b > 0.0))
            throw std::invalid_argument("combined_density: parameters must be positive");
        out.terms.push_back({p.a, p.b, p.sign >= 0 ? 1 : -1});
        lead += out.terms.back().sign * (p.b - p.a);
        lead_scale += std::fabs(p.b - p.a);
    }
    out.regularized = std::fabs(lead) <= 1e-12 * std::max(1.0, lead_scale);
    return out;
}

CombinedDensity density_for_pair(const ExponentPairD& pair) {
    const ExponentPairD n = pair.abs_normalized();
    std::vector<DensityPairing> pairing;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n.alpha[i] == n.beta[i]) continue;
        if (n.alpha[i] == 0.0 || n.beta[i] == 0.0)
            throw std::invalid_argument("density_for_pair: exponents must be nonzero");
        pairing.push_back({n.alpha[i], n.beta[i], 1});
    }
    return combined_density(pairing);
}

CombinedDensity density_for_quad(const ElementaryFactor& quad) {
    if (quad.kind != ElementaryFactor::Kind::Quad)
        throw std::invalid_argument("density_for_quad: factor is not a quad");
    // pair each numerator with one denominator; the sum a + c = b + d makes
    // the 1/t^2 coefficients cancel regardless of which pairing is chosen
    const std::vector<DensityPairing> pairing{{quad.a, quad.d, 1}, {quad.c, quad.b, 1}};
    return combined_density(pairing);
}

GridCheck check_nonneg_grid(const CombinedDensity& d, double t_max, int n_points) {
    if (n_points < 16) throw std::invalid_argument("check_nonneg_grid: need n_points >= 16");
    GridCheck out;
    out.min_value = d.t2_value(0.0);
    out.min_location = 0.0;
    double scale = std::fabs(out.min_value);
    const double t_min = t_max * 1e-6;
    for (int i = 0; i < n_points; ++i) {
        const double t =
            t_min * std::pow(t_max / t_min, static_cast<double>(i) / (n_points - 1));
        for (double signed_t : {t, -t}) {
            const double g = d.t2_value(signed_t);
            scale = std::max(scale, std::fabs(g));
            if (g < out.min_value) {
                out.min_value = g;
                out.min_location = signed_t;
            }
        }
    }
    out.nonneg = out.min_value >= -1e-12 * std::max(1.0, scale);
    return out;
}

double reconstruct_log_h(const CombinedDensity& d, double x, double tol) {
    if (d.terms.empty() || x == 0.0) return 0.0;
    double slowest = 0.0;  // decay rate of each term is pi / max(a, b)
    for (const auto& term : d.terms) slowest = std::max(slowest, std::max(term.a, term.b));
    const double t_max = 45.0 * slowest / kPi;
    const auto integrand = [&](double t) {
        // (cos(x t) - 1)/t^2 = -2 sin^2(x t / 2) / t^2, smooth at the origin
        if (t == 0.0) return -0.5 * x * x * d.t2_value(0.0);
        const double s = std::sin(0.5 * x * t);
        return -2.0 * s * s / (t * t) * d.t2_value(t);
    };
    return 2.0 * integrate_adaptive(integrand, 0.0, t_max, tol);
}

}  // namespace sinhmajor
