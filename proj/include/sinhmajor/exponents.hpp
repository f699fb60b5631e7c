#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sinhmajor/rational.hpp"

namespace sinhmajor {

/// Tuple of exponents; Scalar is double for numeric work, Rational for exact work.
template <class Scalar>
using Tuple = std::vector<Scalar>;

using TupleD = Tuple<double>;
using TupleQ = Tuple<Rational>;

namespace detail {

inline double scalar_abs(double v) { return std::fabs(v); }
inline Rational scalar_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline void check_finite(const TupleD& t) {
    for (double v : t)
        if (!std::isfinite(v)) throw std::invalid_argument("exponent tuple entry is not finite");
}
inline void check_finite(const TupleQ&) {}

}  // namespace detail

/// Component-wise absolute values, sorted non-increasing.
template <class Scalar>
Tuple<Scalar> abs_normalize(Tuple<Scalar> t) {
    for (auto& v : t) v = detail::scalar_abs(v);
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

/// Index (1-based prefix length) of the first violated prefix-sum inequality,
/// or 0 when sorted |u| is weakly submajorized by sorted |v|.
template <class Scalar>
std::size_t first_violating_prefix(const Tuple<Scalar>& u, const Tuple<Scalar>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("weak submajorization needs equal lengths");
    const Tuple<Scalar> a = abs_normalize(u);
    const Tuple<Scalar> b = abs_normalize(v);
    Scalar sa{}, sb{};
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb) return k + 1;
    }
    return 0;
}

/// True iff every k-prefix sum of sorted |u| is <= the one of sorted |v|.
/// Exact for Rational entries, strict float comparison otherwise (ties pass).
template <class Scalar>
bool weak_submajorize(const Tuple<Scalar>& u, const Tuple<Scalar>& v) {
    return first_violating_prefix(u, v) == 0;
}

/// The pair (alpha, beta) defining f_{alpha,beta}; lengths always match.
template <class Scalar>
struct ExponentPairT {
    Tuple<Scalar> alpha;
    Tuple<Scalar> beta;

    ExponentPairT(Tuple<Scalar> a, Tuple<Scalar> b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.empty()) throw std::invalid_argument("exponent pair needs n >= 1");
        if (alpha.size() != beta.size())
            throw std::invalid_argument("exponent pair tuples have mismatched lengths");
        detail::check_finite(alpha);
        detail::check_finite(beta);
    }

    std::size_t size() const { return alpha.size(); }

    /// gamma = (1 - sum(a_i - b_i)) / 2, always recomputed.
    Scalar gamma() const {
        Scalar s{};
        for (std::size_t i = 0; i < alpha.size(); ++i) s += alpha[i] - beta[i];
        return (Scalar(1) - s) / Scalar(2);
    }

    ExponentPairT abs_normalized() const {
        return ExponentPairT(abs_normalize(alpha), abs_normalize(beta));
    }
};

using ExponentPair = ExponentPairT<Rational>;
using ExponentPairD = ExponentPairT<double>;

inline TupleD to_double(const TupleQ& t) {
    TupleD out;
    out.reserve(t.size());
    for (const auto& v : t) out.push_back(to_double(v));
    return out;
}

inline ExponentPairD to_double(const ExponentPair& p) {
    return ExponentPairD(to_double(p.alpha), to_double(p.beta));
}

/// Concatenated tuples (alpha_L, beta_R) and (beta_L, alpha_R) used in the
/// combined weak-submajorization test for ||| M_L X ||| <= ||| M_R X |||.
template <class Scalar>
std::pair<Tuple<Scalar>, Tuple<Scalar>> combined_pair_tuples(const ExponentPairT<Scalar>& lhs,
                                                             const ExponentPairT<Scalar>& rhs) {
    Tuple<Scalar> top = lhs.alpha;
    top.insert(top.end(), rhs.beta.begin(), rhs.beta.end());
    Tuple<Scalar> bottom = lhs.beta;
    bottom.insert(bottom.end(), rhs.alpha.begin(), rhs.alpha.end());
    return {std::move(top), std::move(bottom)};
}

}  // namespace sinhmajor
