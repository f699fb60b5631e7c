#include "sinhmajor/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sinhmajor::io {

namespace {

TupleQ parse_tuple(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError("pair JSON needs an array field '" + key + "'");
    TupleQ out;
    std::size_t index = 0;
    for (const auto& entry : doc[key])
        out.push_back(parse_rational_entry(entry, key + "[" + std::to_string(index++) + "]"));
    if (out.empty()) throw ParseError("'" + key + "' must not be empty");
    return out;
}

json rational_json(const Rational& q) {
    if (denominator(q) == 1) {
        // keep small integers as JSON numbers for readability
        if (numerator(q) >= -(1LL << 53) && numerator(q) <= (1LL << 53))
            return json(numerator(q).convert_to<std::int64_t>());
    }
    return json(format_rational(q));
}

}  // namespace

Rational parse_rational_entry(const json& entry, const std::string& where) {
    if (entry.is_string()) {
        try {
            return parse_rational(entry.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (entry.is_number_integer()) return Rational(entry.get<std::int64_t>());
    if (entry.is_number_unsigned()) return Rational(Int(entry.get<std::uint64_t>()));
    if (entry.is_number_float()) {
        const double v = entry.get<double>();
        if (!std::isfinite(v)) throw ParseError(where + ": non-finite number");
        return Rational(v);
    }
    throw ParseError(where + ": expected a number or a 'p/q' string");
}

ExponentPair parse_pair(const json& doc) {
    if (!doc.is_object()) throw ParseError("pair JSON must be an object");
    TupleQ alpha = parse_tuple(doc, "alpha");
    TupleQ beta = parse_tuple(doc, "beta");
    if (alpha.size() != beta.size())
        throw ParseError("alpha and beta must have the same length");
    return ExponentPair(std::move(alpha), std::move(beta));
}

ExponentPair parse_pair_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_pair(doc);
}

json to_json(const TupleQ& tuple) {
    json arr = json::array();
    for (const auto& v : tuple) arr.push_back(rational_json(v));
    return arr;
}

json to_json(const ExponentPair& pair) {
    return json{{"alpha", to_json(pair.alpha)},
                {"beta", to_json(pair.beta)},
                {"gamma", format_rational(pair.gamma())}};
}

json to_json(const PositivityCertificate& cert) {
    json coefficients = json::array();
    for (const auto& c : cert.coefficients) coefficients.push_back(format_rational(c));
    const char* verdict = cert.verdict == CertVerdict::Certified    ? "certified"
                          : cert.verdict == CertVerdict::Refuted    ? "refuted"
                                                                    : "inconclusive";
    json out{{"checked_upto", cert.checked_upto},
             {"coefficients", coefficients},
             {"tail_bound", format_rational(cert.tail_bound)},
             {"verdict", verdict}};
    if (cert.refutation_index) out["refutation_index"] = *cert.refutation_index;
    return out;
}

json to_json(const FactorizationQ& factorization) {
    json factors = json::array();
    for (const auto& f : factorization.factors) {
        if (f.kind == ElementaryFactorQ::Kind::SimpleRatio) {
            factors.push_back(json{{"kind", "simple-ratio"},
                                   {"a", format_rational(f.a)},
                                   {"b", format_rational(f.b)}});
        } else {
            factors.push_back(json{{"kind", "quad"},
                                   {"a", format_rational(f.a)},
                                   {"c", format_rational(f.c)},
                                   {"b", format_rational(f.b)},
                                   {"d", format_rational(f.d)}});
        }
    }
    return json{{"factors", factors},
                {"alpha", to_json(factorization.source.alpha)},
                {"beta", to_json(factorization.source.beta)}};
}

json to_json(const GramWitness& witness) {
    return json{{"points", witness.points},
                {"min_eigenvalue", witness.min_eigenvalue},
                {"determinant", witness.determinant}};
}

json to_json(const GramReport& report) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < report.matrix.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < report.matrix.cols(); ++j) row.push_back(report.matrix(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"points", report.points},
                {"matrix", rows},
                {"min_eigenvalue", report.min_eigenvalue},
                {"determinant", report.determinant},
                {"is_psd", report.is_psd}};
}

json to_json(const Classification& classification) {
    json out{{"verdict", std::string(verdict_name(classification.verdict))},
             {"rule", std::string(rule_name(classification.rule))}};
    if (const auto* f = std::get_if<FactorizationQ>(&classification.certificate)) {
        out["certificate"] = json{{"type", "factorization"}, {"value", to_json(*f)}};
    } else if (const auto* c = std::get_if<PositivityCertificate>(&classification.certificate)) {
        out["certificate"] = json{{"type", "positivity-certificate"}, {"value", to_json(*c)}};
    } else if (const auto* p26 = std::get_if<Prop26Witness>(&classification.certificate)) {
        out["certificate"] = json{{"type", "sum-witness"},
                                  {"sum_alpha", format_rational(p26->sum_alpha)},
                                  {"sum_beta", format_rational(p26->sum_beta)}};
    } else if (const auto* p27 = std::get_if<Prop27Witness>(&classification.certificate)) {
        out["certificate"] = json{{"type", "max-witness"},
                                  {"alpha_max", format_rational(p27->alpha_max)},
                                  {"beta_max", format_rational(p27->beta_max)}};
    } else if (const auto* w = std::get_if<GramWitness>(&classification.certificate)) {
        out["certificate"] = json{{"type", "gram-witness"}, {"value", to_json(*w)}};
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

json to_json(const MeanTrialReport& trial) {
    json lhs{{"ky_fan", std::vector<double>(trial.lhs_norms.begin(), trial.lhs_norms.end() - 1)},
             {"frobenius", trial.lhs_norms.back()},
             {"operator", trial.lhs_norms.front()},
             {"trace", trial.lhs_norms[trial.lhs_norms.size() - 2]}};
    json rhs{{"ky_fan", std::vector<double>(trial.rhs_norms.begin(), trial.rhs_norms.end() - 1)},
             {"frobenius", trial.rhs_norms.back()},
             {"operator", trial.rhs_norms.front()},
             {"trace", trial.rhs_norms[trial.rhs_norms.size() - 2]}};
    return json{{"trial", trial.trial}, {"seed", trial.seed},     {"n", trial.n},
                {"lhs", lhs},           {"rhs", rhs},             {"pass", trial.pass},
                {"margin", trial.margin}};
}

json to_json(const VerifyReport& report, std::uint64_t seed, int n) {
    json trials = json::array();
    for (const auto& t : report.trials) trials.push_back(to_json(t));
    return json{{"seed", seed},
                {"n", n},
                {"trials", static_cast<int>(report.trials.size())},
                {"exploratory", report.exploratory},
                {"failures", report.failures},
                {"reports", trials}};
}

json to_json(const CoshExpansion& expansion) {
    json terms = json::array();
    // canonical order: descending frequency
    for (auto it = expansion.terms.rbegin(); it != expansion.terms.rend(); ++it)
        terms.push_back(json{{"frequency", format_rational(it->first)},
                             {"coefficient", format_rational(it->second)}});
    return json{{"parity", expansion.parity == Parity::Even ? "even" : "odd"}, {"terms", terms}};
}

std::vector<SinhProductTerm> parse_sinh_terms(const json& doc) {
    if (!doc.is_array()) throw ParseError("terms JSON must be an array");
    std::vector<SinhProductTerm> out;
    std::size_t index = 0;
    for (const auto& entry : doc) {
        const std::string where = "terms[" + std::to_string(index++) + "]";
        if (!entry.is_object() || !entry.contains("frequencies"))
            throw ParseError(where + ": expected {coefficient, frequencies}");
        SinhProductTerm term;
        term.coefficient = entry.contains("coefficient")
                               ? parse_rational_entry(entry["coefficient"], where + ".coefficient")
                               : Rational(1);
        for (const auto& f : entry["frequencies"])
            term.frequencies.push_back(parse_rational_entry(f, where + ".frequencies"));
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<DensityPairing> parse_density_pairing(const json& doc) {
    if (!doc.is_array()) throw ParseError("pairing JSON must be an array");
    std::vector<DensityPairing> out;
    std::size_t index = 0;
    for (const auto& entry : doc) {
        const std::string where = "pairing[" + std::to_string(index++) + "]";
        if (!entry.is_object() || !entry.contains("a") || !entry.contains("b"))
            throw ParseError(where + ": expected {a, b, sign}");
        DensityPairing p;
        p.a = to_double(parse_rational_entry(entry["a"], where + ".a"));
        p.b = to_double(parse_rational_entry(entry["b"], where + ".b"));
        p.sign = entry.contains("sign") ? entry["sign"].get<int>() : 1;
        out.push_back(p);
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        try {
            out.push_back(to_double(parse_rational(token)));
        } catch (const std::exception&) {
            try {
                std::size_t used = 0;
                const double v = std::stod(token, &used);
                if (used != token.size() || !std::isfinite(v)) throw ParseError("");
                out.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("invalid number '" + token + "' in list");
            }
        }
    }
    if (out.empty()) throw ParseError("empty number list");
    return out;
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace sinhmajor::io
