#pragma once

#include <json.hpp>

#include <string>

#include "sinhmajor/classifier.hpp"
#include "sinhmajor/density.hpp"
#include "sinhmajor/expander.hpp"
#include "sinhmajor/exponents.hpp"
#include "sinhmajor/factorizer.hpp"
#include "sinhmajor/gram.hpp"
#include "sinhmajor/matmeans.hpp"

namespace sinhmajor::io {

using nlohmann::json;

/// Parse failure with a human-readable location hint.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational from a JSON entry: integers stay exact, "p/q" strings parse
/// exactly, other floats convert via their exact binary value.
Rational parse_rational_entry(const json& entry, const std::string& where);

/// {"alpha":[...], "beta":[...]} with numbers or "p/q" strings.
ExponentPair parse_pair(const json& doc);
ExponentPair parse_pair_text(const std::string& text);

json to_json(const TupleQ& tuple);
json to_json(const ExponentPair& pair);
json to_json(const PositivityCertificate& cert);
json to_json(const FactorizationQ& factorization);
json to_json(const GramWitness& witness);
json to_json(const GramReport& report);
json to_json(const Classification& classification);
json to_json(const MeanTrialReport& trial);
json to_json(const VerifyReport& report, std::uint64_t seed, int n);
json to_json(const CoshExpansion& expansion);

/// [{"coefficient": "1", "frequencies": ["1/144", ...]}, ...]
std::vector<SinhProductTerm> parse_sinh_terms(const json& doc);

/// [{"a": 8, "b": 9, "sign": 1}, ...]
std::vector<DensityPairing> parse_density_pairing(const json& doc);

/// Comma-separated numbers or rationals ("0,1/3,2/3,1").
std::vector<double> parse_number_list(const std::string& text);

std::string format_double(double value);

}  // namespace sinhmajor::io
