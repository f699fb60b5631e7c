#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sinhmajor/rational.hpp"

namespace sinhmajor {

/// coefficient * prod_i sinh(frequencies[i] * s), frequencies > 0.
struct SinhProductTerm {
    Rational coefficient;
    std::vector<Rational> frequencies;
};

enum class Parity { Even, Odd };

/// Exact product-to-sum expansion: sum_j terms[w_j] * cosh(w_j s) (even parity)
/// or sum_j terms[w_j] * sinh(w_j s) (odd parity). No zero coefficients stored.
struct CoshExpansion {
    Parity parity = Parity::Even;
    std::map<Rational, Rational> terms;  // frequency >= 0 -> coefficient

    /// Numeric evaluation, for cross-checks only.
    double value(double s) const;

    /// Largest stored frequency, if any.
    std::optional<Rational> max_frequency() const;
};

struct RescaleResult {
    Rational scale;  // substitution s -> s / scale makes all frequencies integers
    std::vector<SinhProductTerm> terms;
};

/// Substitutes s -> s/L with L = lcm(denominators)/gcd(numerators) so that all
/// frequencies become positive integers on the coarsest common grid.
RescaleResult rescale_to_integers(std::span<const SinhProductTerm> terms);

/// Expands a signed combination of sinh products exactly via
/// prod sinh(b_i s) = 2^{-n} sum_{eps} (prod eps_i) e^{(eps . b) s}.
/// All terms must have the same factor-count parity.
CoshExpansion expand(std::span<const SinhProductTerm> terms);

/// k-th even-series coefficient sum_j c_j w_j^{2k} (even parity) or
/// sum_j c_j w_j^{2k+1} (odd parity); the positive factorial factor is omitted.
Rational taylor_coefficient(const CoshExpansion& e, unsigned k);

enum class CertVerdict { Certified, Refuted, Inconclusive };

struct PositivityCertificate {
    unsigned checked_upto = 0;            // K
    std::vector<Rational> coefficients;   // c_0 .. c_K, exact
    Rational tail_bound;                  // dominance margin at K
    CertVerdict verdict = CertVerdict::Inconclusive;
    std::optional<unsigned> refutation_index;
};

/// Exact nonnegativity certificate: checks c_0..c_K >= 0 and the dominance
/// bound c_max - sum_{w_j < w_max} |c_j| (w_j/w_max)^{2K} > 0, which forces
/// c_k > 0 for every k >= K. Never returns a false certificate.
PositivityCertificate certify_nonnegative(const CoshExpansion& e, unsigned K);

/// max(16, smallest K passing the dominance bound + 2); empty when no K up to
/// the cap works (an inconclusive certificate is a legal outcome).
std::optional<unsigned> default_certify_depth(const CoshExpansion& e, unsigned cap = 64);

}  // namespace sinhmajor
