#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "sinhmajor/expander.hpp"
#include "sinhmajor/exponents.hpp"
#include "sinhmajor/factorizer.hpp"
#include "sinhmajor/gram.hpp"

namespace sinhmajor {

enum class Verdict { InfinitelyDivisible, NotPositiveDefinite, Unknown };

enum class Rule {
    None,
    WeakSubmajorization,  // sufficient: constructive factorization
    SumTest,              // necessary: sum(alpha) > sum(beta) forces blow-up
    MaxTest,              // necessary: max(alpha) > max(beta) kills positive definiteness
    DensityCertificate,   // exact nonnegative Kolmogorov density
    GramWitness,          // numeric non-PSD Gram matrix
};

std::string_view rule_name(Rule rule);
std::string_view verdict_name(Verdict verdict);

struct Prop26Witness {
    Rational sum_alpha;
    Rational sum_beta;
};

struct Prop27Witness {
    Rational alpha_max;
    Rational beta_max;
};

using Certificate = std::variant<std::monostate, FactorizationQ, PositivityCertificate,
                                 Prop26Witness, Prop27Witness, GramWitness>;

struct Classification {
    Verdict verdict = Verdict::Unknown;
    Rule rule = Rule::None;
    Certificate certificate;
};

struct ClassifyOptions {
    bool probe = true;
    int budget_ms = 2000;     // wall-clock cap for the numeric probes
    int probe_max_size = 16;  // Gram grid size cap
};

/// Decision ladder: weak submajorization (=> infinitely divisible, with a
/// factorization), then the sum and max necessary conditions (=> not positive
/// definite), then optional bounded-effort probes (exact density certificate,
/// Gram witness search), else Unknown. Tuples may have different lengths; the
/// shorter is padded with zeros and matched zero slots are dropped.
Classification classify(const TupleQ& alpha, const TupleQ& beta, const ClassifyOptions& = {});

/// Exact single-pair regions for f_{a,b} <= f_{c,d} (boundary inclusive):
///   a >  b: c >= a and 0 <= d <= c - a + b;
///   a <= b: d <= c, or c <= d <= c - a + b with d <= b.
bool classify_single(double a, double b, double c, double d);

/// n = 2 characterization: with a1 >= a2 and b1 >= b2 (checked),
/// sinh(a1 x) sinh(a2 x) / (sinh(b1 x) sinh(b2 x)) is positive definite iff
/// a1 <= b1 and a1 + a2 <= b1 + b2.
bool two_factor_criterion(double a1, double a2, double b1, double b2);

/// The numerator combination g whose nonnegativity certifies that the
/// slot-paired Kosaki density of log h_{alpha,beta} is a positive measure
/// density (all entries must be positive; equal slots are skipped).
std::vector<SinhProductTerm> density_numerator_terms(const TupleQ& alpha, const TupleQ& beta);

}  // namespace sinhmajor
