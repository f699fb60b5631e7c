#include "sinhmajor/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "sinhmajor/scalarfn.hpp"

namespace sinhmajor {

namespace {

bool all_positive(const TupleQ& t) {
    return std::all_of(t.begin(), t.end(), [](const Rational& v) { return v > 0; });
}

Rational tuple_sum(const TupleQ& t) {
    Rational s = 0;
    for (const auto& v : t) s += v;
    return s;
}

}  // namespace

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::WeakSubmajorization: return "weak-submajorization";
        case Rule::SumTest: return "sum-test";
        case Rule::MaxTest: return "max-test";
        case Rule::DensityCertificate: return "density-certificate";
        case Rule::GramWitness: return "gram-witness";
        case Rule::None: break;
    }
    return "none";
}

std::string_view verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::InfinitelyDivisible: return "infinitely-divisible";
        case Verdict::NotPositiveDefinite: return "not-positive-definite";
        case Verdict::Unknown: break;
    }
    return "unknown";
}

std::vector<SinhProductTerm> density_numerator_terms(const TupleQ& alpha_in, const TupleQ& beta_in) {
    const TupleQ alpha = abs_normalize(alpha_in);
    const TupleQ beta = abs_normalize(beta_in);
    if (alpha.size() != beta.size())
        throw std::invalid_argument("density_numerator_terms: tuples have mismatched lengths");
    if (!all_positive(alpha) || !all_positive(beta))
        throw std::invalid_argument("density_numerator_terms: entries must be positive");

    // slot-paired terms sign_i * sinh(|1/a - 1/b| pi t / 2) over the shared
    // denominator prod sinh(pi t / (2 v)); frequencies in units of pi t
    struct Slot {
        Rational delta;  // |1/a - 1/b| / 2
        int sign;
        Rational den_a, den_b;  // 1/(2a), 1/(2b)
    };
    std::vector<Slot> slots;
    std::map<Rational, int> denominator_union;  // frequency -> max multiplicity
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const Rational& a = alpha[i];
        const Rational& b = beta[i];
        if (a == b) continue;
        Slot slot;
        slot.sign = a < b ? 1 : -1;
        const Rational diff = (Rational(1) / a - Rational(1) / b) / 2;
        slot.delta = diff < 0 ? Rational(-diff) : diff;
        slot.den_a = Rational(1) / (2 * a);
        slot.den_b = Rational(1) / (2 * b);
        std::map<Rational, int> local;
        ++local[slot.den_a];
        ++local[slot.den_b];
        for (const auto& [w, count] : local)
            denominator_union[w] = std::max(denominator_union[w], count);
        slots.push_back(std::move(slot));
    }

    std::vector<SinhProductTerm> terms;
    for (const auto& slot : slots) {
        SinhProductTerm term;
        term.coefficient = slot.sign;
        term.frequencies.push_back(slot.delta);
        std::map<Rational, int> remaining = denominator_union;
        --remaining[slot.den_a];
        --remaining[slot.den_b];
        for (const auto& [w, count] : remaining)
            for (int k = 0; k < count; ++k) term.frequencies.push_back(w);
        terms.push_back(std::move(term));
    }
    return terms;
}

Classification classify(const TupleQ& alpha_in, const TupleQ& beta_in,
                        const ClassifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    TupleQ alpha = abs_normalize(alpha_in);
    TupleQ beta = abs_normalize(beta_in);
    while (alpha.size() < beta.size()) alpha.push_back(0);
    while (beta.size() < alpha.size()) beta.push_back(0);
    if (alpha.empty()) throw std::invalid_argument("classify: empty tuples");
    while (!alpha.empty() && alpha.back() == 0 && beta.back() == 0) {
        alpha.pop_back();
        beta.pop_back();
    }
    if (alpha.empty()) return {Verdict::InfinitelyDivisible, Rule::WeakSubmajorization,
                               FactorizationQ{{}, ExponentPair({0}, {0})}};

    Classification result;

    if (weak_submajorize(alpha, beta) && all_positive(beta)) {
        result.verdict = Verdict::InfinitelyDivisible;
        result.rule = Rule::WeakSubmajorization;
        result.certificate = factorize(alpha, beta);
        return result;
    }

    const Rational sum_alpha = tuple_sum(alpha);
    const Rational sum_beta = tuple_sum(beta);
    if (sum_alpha > sum_beta) {
        result.verdict = Verdict::NotPositiveDefinite;
        result.rule = Rule::SumTest;
        result.certificate = Prop26Witness{sum_alpha, sum_beta};
        return result;
    }

    if (all_positive(alpha) && all_positive(beta) && alpha.front() > beta.front()) {
        result.verdict = Verdict::NotPositiveDefinite;
        result.rule = Rule::MaxTest;
        result.certificate = Prop27Witness{alpha.front(), beta.front()};
        return result;
    }

    if (!options.probe) return result;
    const auto deadline = started + std::chrono::milliseconds(options.budget_ms);

    // exact route first: expand the density numerator and certify it
    if (all_positive(alpha) && all_positive(beta)) {
        const auto terms = density_numerator_terms(alpha, beta);
        // each term expands into 2^(factor count) signed exponentials
        const bool affordable =
            !terms.empty() && terms.front().frequencies.size() <= 20;
        if (affordable) {
            const auto rescaled = rescale_to_integers(terms);
            const CoshExpansion expansion = expand(rescaled.terms);
            if (const auto depth = default_certify_depth(expansion)) {
                PositivityCertificate cert = certify_nonnegative(expansion, *depth);
                if (cert.verdict == CertVerdict::Certified) {
                    result.verdict = Verdict::InfinitelyDivisible;
                    result.rule = Rule::DensityCertificate;
                    result.certificate = std::move(cert);
                    return result;
                }
            }
        }
    }

    if (std::chrono::steady_clock::now() < deadline) {
        const ExponentPairD pair(to_double(alpha), to_double(beta));
        const auto phi = [&pair](double x) { return eval_h(pair, x); };
        const double spacings[] = {1.0 / 3.0, 0.5, 1.0, 2.0};
        if (auto witness = gram_probe(phi, spacings, options.probe_max_size, 1e-8, deadline)) {
            result.verdict = Verdict::NotPositiveDefinite;
            result.rule = Rule::GramWitness;
            result.certificate = std::move(*witness);
            return result;
        }
    }
    return result;
}

bool classify_single(double a, double b, double c, double d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("classify_single: arguments must be nonnegative");
    if (a > b) return c >= a && d <= c - a + b;
    // a <= b (the a == b diagonal belongs here: f_{a,a} = sqrt(t) for every a)
    return d <= c || (d <= c - a + b && d <= b);
}

bool two_factor_criterion(double a1, double a2, double b1, double b2) {
    if (a1 < a2 || b1 < b2)
        throw std::invalid_argument("two_factor_criterion: pairs must be sorted non-increasing");
    return a1 <= b1 && a1 + a2 <= b1 + b2;
}

}  // namespace sinhmajor
