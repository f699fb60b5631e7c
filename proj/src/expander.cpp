#include "sinhmajor/expander.hpp"

#include <cmath>
#include <stdexcept>

namespace sinhmajor {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void check_term(const SinhProductTerm& term) {
    if (term.frequencies.empty())
        throw std::invalid_argument("sinh product term needs at least one factor");
    for (const auto& f : term.frequencies)
        if (f <= 0) throw std::invalid_argument("sinh product frequencies must be positive");
}

}  // namespace

double CoshExpansion::value(double s) const {
    double sum = 0.0;
    for (const auto& [w, c] : terms) {
        const double ws = to_double(w) * s;
        sum += to_double(c) * (parity == Parity::Even ? std::cosh(ws) : std::sinh(ws));
    }
    return sum;
}

std::optional<Rational> CoshExpansion::max_frequency() const {
    if (terms.empty()) return std::nullopt;
    return terms.rbegin()->first;
}

RescaleResult rescale_to_integers(std::span<const SinhProductTerm> terms) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int den_lcm = 1;
    Int num_gcd = 0;
    for (const auto& term : terms) {
        check_term(term);
        for (const auto& f : term.frequencies) {
            den_lcm = lcm(den_lcm, denominator(f));
            num_gcd = gcd(num_gcd, numerator(f));
        }
    }
    RescaleResult out;
    out.scale = num_gcd == 0 ? Rational(1) : Rational(den_lcm, num_gcd);
    out.terms.assign(terms.begin(), terms.end());
    for (auto& term : out.terms)
        for (auto& f : term.frequencies) f *= out.scale;
    return out;
}

CoshExpansion expand(std::span<const SinhProductTerm> terms) {
    std::optional<std::size_t> factor_parity;
    // signed exponential representation: frequency (any sign) -> coefficient
    std::map<Rational, Rational> wave;
    for (const auto& term : terms) {
        check_term(term);
        const std::size_t n = term.frequencies.size();
        if (factor_parity && (*factor_parity % 2) != (n % 2))
            throw std::invalid_argument("expand: mixed factor-count parity across terms");
        factor_parity = n;

        std::map<Rational, Rational> acc{{Rational(0), term.coefficient}};
        for (const auto& f : term.frequencies) {
            std::map<Rational, Rational> next;
            for (const auto& [w, c] : acc) {
                const Rational half = c / 2;
                next[w + f] += half;
                next[w - f] -= half;
            }
            acc.swap(next);
        }
        for (const auto& [w, c] : acc) wave[w] += c;
    }

    CoshExpansion out;
    out.parity = (factor_parity && *factor_parity % 2 == 1) ? Parity::Odd : Parity::Even;
    for (const auto& [w, c] : wave) {
        if (w < 0) continue;
        Rational coeff = c;
        if (w > 0) {
            auto mirror = wave.find(Rational(-w));
            const Rational mc = mirror == wave.end() ? Rational(0) : mirror->second;
            coeff = out.parity == Parity::Even ? Rational(c + mc) : Rational(c - mc);
        } else if (out.parity == Parity::Odd) {
            if (c != 0) throw std::logic_error("expand: odd expansion with constant term");
            continue;
        }
        if (coeff != 0) out.terms.emplace(w, coeff);
    }
    return out;
}

Rational taylor_coefficient(const CoshExpansion& e, unsigned k) {
    const unsigned power = e.parity == Parity::Even ? 2 * k : 2 * k + 1;
    Rational sum = 0;
    for (const auto& [w, c] : e.terms) sum += c * rational_pow(w, power);
    return sum;
}

PositivityCertificate certify_nonnegative(const CoshExpansion& e, unsigned K) {
    if (K < 1) throw std::invalid_argument("certify_nonnegative: K must be >= 1");
    PositivityCertificate cert;
    cert.checked_upto = K;
    cert.coefficients.reserve(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        Rational ck = taylor_coefficient(e, k);
        if (ck < 0 && !cert.refutation_index) cert.refutation_index = k;
        cert.coefficients.push_back(std::move(ck));
    }
    if (cert.refutation_index) {
        cert.verdict = CertVerdict::Refuted;
        cert.tail_bound = 0;
        return cert;
    }
    if (e.terms.empty()) {
        // the zero expansion is trivially nonnegative
        cert.verdict = CertVerdict::Certified;
        cert.tail_bound = 0;
        return cert;
    }
    const Rational w_max = *e.max_frequency();
    const Rational c_max = e.terms.rbegin()->second;
    if (w_max == 0 || c_max <= 0) {
        cert.verdict = CertVerdict::Inconclusive;
        cert.tail_bound = 0;
        return cert;
    }
    const unsigned power = e.parity == Parity::Even ? 2 * K : 2 * K + 1;
    Rational bound = c_max;
    for (const auto& [w, c] : e.terms) {
        if (w == w_max) continue;
        bound -= abs_q(c) * rational_pow(Rational(w / w_max), power);
    }
    cert.tail_bound = bound;
    cert.verdict = bound > 0 ? CertVerdict::Certified : CertVerdict::Inconclusive;
    return cert;
}

std::optional<unsigned> default_certify_depth(const CoshExpansion& e, unsigned cap) {
    if (e.terms.empty()) return 16;
    const Rational w_max = *e.max_frequency();
    const Rational c_max = e.terms.rbegin()->second;
    if (w_max == 0 || c_max <= 0) return std::nullopt;
    for (unsigned K = 1; K <= cap; ++K) {
        const unsigned power = e.parity == Parity::Even ? 2 * K : 2 * K + 1;
        Rational bound = c_max;
        for (const auto& [w, c] : e.terms) {
            if (w == w_max) continue;
            bound -= abs_q(c) * rational_pow(Rational(w / w_max), power);
            if (bound <= 0) break;
        }
        if (bound > 0) return std::max(16u, K + 2);
    }
    return std::nullopt;
}

}  // namespace sinhmajor
