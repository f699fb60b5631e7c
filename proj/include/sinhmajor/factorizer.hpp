#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sinhmajor/exponents.hpp"
#include "sinhmajor/scalarfn.hpp"

namespace sinhmajor {

/// Weak-submajorization precondition failure; carries the 1-based prefix
/// length whose sum inequality is violated.
class NotSubmajorizedError : public std::domain_error {
public:
    explicit NotSubmajorizedError(std::size_t prefix)
        : std::domain_error("tuples are not weakly submajorized (prefix " + std::to_string(prefix) +
                            ")"),
          prefix_index_(prefix) {}
    std::size_t prefix_index() const { return prefix_index_; }

private:
    std::size_t prefix_index_;
};

/// Certified infinitely divisible building block, normalized to value 1 at 0.
///  - SimpleRatio: b sinh(a x) / (a sinh(b x)) with a <= b
///    (a = 0 is the log-convention limit b x / sinh(b x)).
///  - Quad: (b d / a c) sinh(a x) sinh(c x) / (sinh(b x) sinh(d x)) with
///    d > max{a, b, c} and a + c = b + d.
template <class Scalar>
struct ElementaryFactorT {
    enum class Kind { SimpleRatio, Quad };
    Kind kind;
    Scalar a{}, c{}, b{}, d{};  // SimpleRatio uses a, b only

    static ElementaryFactorT simple_ratio(Scalar a, Scalar b) {
        return {Kind::SimpleRatio, std::move(a), Scalar{}, std::move(b), Scalar{}};
    }
    static ElementaryFactorT quad(Scalar a, Scalar c, Scalar b, Scalar d) {
        return {Kind::Quad, std::move(a), std::move(c), std::move(b), std::move(d)};
    }
};

using ElementaryFactor = ElementaryFactorT<double>;
using ElementaryFactorQ = ElementaryFactorT<Rational>;

template <class Scalar>
struct FactorizationT {
    std::vector<ElementaryFactorT<Scalar>> factors;
    ExponentPairT<Scalar> source;  // abs-normalized input pair
};

using Factorization = FactorizationT<double>;
using FactorizationQ = FactorizationT<Rational>;

namespace detail {

inline bool sums_match(double lhs, double rhs) {
    const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    return std::fabs(lhs - rhs) <= 1e-12 * scale;
}
inline bool sums_match(const Rational& lhs, const Rational& rhs) { return lhs == rhs; }

}  // namespace detail

/// Lemma condition for the quad sinh(a x) sinh(c x) / (sinh(b x) sinh(d x)):
/// after orienting so d is the larger denominator frequency, d > max{a, b, c}
/// and a + c = b + d.
template <class Scalar>
bool lemma23_check(Scalar a, Scalar c, Scalar b, Scalar d) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0) return false;
    if (d < b) std::swap(b, d);
    return d > a && d > b && d > c && detail::sums_match(a + c, b + d);
}

/// Numeric value of one factor at x, via sinhc ratios.
inline double factor_value(const ElementaryFactor& f, double x) {
    if (f.kind == ElementaryFactor::Kind::SimpleRatio) return sinhc(f.a * x) / sinhc(f.b * x);
    return sinhc(f.a * x) * sinhc(f.c * x) / (sinhc(f.b * x) * sinhc(f.d * x));
}

inline ElementaryFactor to_double(const ElementaryFactorQ& f) {
    const auto kind = f.kind == ElementaryFactorQ::Kind::SimpleRatio
                          ? ElementaryFactor::Kind::SimpleRatio
                          : ElementaryFactor::Kind::Quad;
    return {kind, to_double(f.a), to_double(f.c), to_double(f.b), to_double(f.d)};
}

inline double factor_value(const ElementaryFactorQ& f, double x) {
    return factor_value(to_double(f), x);
}

/// Decomposes h_{alpha,beta} into elementary factors along the weak-
/// submajorization induction: while some a_j > b_j (tuples sorted
/// non-increasing), split off the quad
///   sinh(a_j x) sinh((b_{j-1}+b_j-a_j) x) / (sinh(b_{j-1} x) sinh(b_j x)),
/// replace the consumed entries, re-sort and recurse; once a_i <= b_i holds
/// component-wise, the rest splits into simple ratios. Unit factors are
/// pruned. Zeros in alpha are legal (log-convention simple ratios); zeros in
/// beta must cancel against zeros in alpha beforehand.
template <class Scalar>
FactorizationT<Scalar> factorize(const Tuple<Scalar>& alpha_in, const Tuple<Scalar>& beta_in) {
    Tuple<Scalar> alpha = abs_normalize(alpha_in);
    Tuple<Scalar> beta = abs_normalize(beta_in);
    if (const std::size_t k = first_violating_prefix(alpha, beta); k != 0)
        throw NotSubmajorizedError(k);

    // drop matched zero slots; remaining beta zeros are outside the theorem
    while (!alpha.empty() && alpha.back() == Scalar{} && beta.back() == Scalar{}) {
        alpha.pop_back();
        beta.pop_back();
    }
    for (const Scalar& b : beta)
        if (b == Scalar{})
            throw std::invalid_argument("factorize: zero denominator exponent without a matching "
                                        "zero numerator exponent");

    FactorizationT<Scalar> out{{}, ExponentPairT<Scalar>(alpha, beta)};
    while (true) {
        std::size_t j = alpha.size();
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] > beta[i]) {
                j = i;
                break;
            }
        }
        if (j == alpha.size()) break;
        // j >= 1: the k = 1 prefix inequality gives alpha[0] <= beta[0], and the
        // replacement below preserves weak submajorization of the reduced pair
        if (j == 0) throw std::logic_error("factorize: submajorization invariant lost");
        const Scalar a_j = alpha[j];
        const Scalar big = beta[j - 1];
        const Scalar small = beta[j];
        const Scalar fresh = big + small - a_j;  // exact by construction
        if (a_j != big)  // a_j == big collapses the quad to the unit factor
            out.factors.push_back(ElementaryFactorT<Scalar>::quad(a_j, fresh, small, big));
        alpha.erase(alpha.begin() + static_cast<std::ptrdiff_t>(j));
        beta.erase(beta.begin() + static_cast<std::ptrdiff_t>(j - 1),
                   beta.begin() + static_cast<std::ptrdiff_t>(j + 1));
        beta.insert(std::lower_bound(beta.begin(), beta.end(), fresh, std::greater<>()), fresh);
    }
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != beta[i])
            out.factors.push_back(ElementaryFactorT<Scalar>::simple_ratio(alpha[i], beta[i]));
    return out;
}

template <class Scalar>
FactorizationT<Scalar> factorize(const ExponentPairT<Scalar>& pair) {
    return factorize(pair.alpha, pair.beta);
}

/// prod_i factor_value(factors[i], x); matches eval_h of the source pair.
template <class Scalar>
double factorization_value(const FactorizationT<Scalar>& f, double x) {
    double value = 1.0;
    for (const auto& factor : f.factors) value *= factor_value(factor, x);
    return value;
}

}  // namespace sinhmajor
