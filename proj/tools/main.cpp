#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sinhmajor/classifier.hpp"
#include "sinhmajor/density.hpp"
#include "sinhmajor/expander.hpp"
#include "sinhmajor/factorizer.hpp"
#include "sinhmajor/gram.hpp"
#include "sinhmajor/io.hpp"
#include "sinhmajor/matmeans.hpp"
#include "sinhmajor/scalarfn.hpp"

namespace {

using namespace sinhmajor;
using nlohmann::json;

// exit codes: 0 pass, 1 check failure, 2 usage error, 3 numerical trouble
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SINHMAJOR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw io::ParseError("SINHMAJOR_SEED is not an integer");
        }
    }
    return 42;
}

std::string read_payload(const std::string& inline_text, const std::string& in_path) {
    if (!inline_text.empty()) return inline_text;
    if (in_path.empty()) throw io::ParseError("missing input: pass inline JSON or --in <file>");
    if (in_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(in_path);
    if (!file) throw io::ParseError("cannot open input file '" + in_path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
    file << text << "\n";
}

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io::ParseError(std::string(what) + ": " + e.what());
    }
}

struct ReproCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

void print_checks(const std::vector<ReproCheck>& checks, bool* all_pass) {
    for (const auto& check : checks) {
        std::cout << (check.pass ? "[pass] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) std::cout << "  (" << check.detail << ")";
        std::cout << "\n";
        if (!check.pass) *all_pass = false;
    }
}

int run_repro(const std::string& name, std::uint64_t seed);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sinh-ratio matrix means: classification, certificates and norm checks"};
    app.require_subcommand(1);

    std::string pair_text, in_path, out_path, points_text, terms_text, pairing_text;
    std::string lhs_text, rhs_text, repro_name;
    double arg_t = 0, arg_x = 0, arg_a = 0, arg_b = 0, arg_c = 0, arg_d = 0;
    bool have_t = false, have_x = false, probe = false, csv = false;
    int budget_ms = 2000, max_size = 16, grid_points = 200, trials = 100, dim = 3;
    unsigned certify_k = 0;
    double reconstruct_x = 0;
    bool have_reconstruct = false;
    std::uint64_t seed = 0;
    bool have_seed = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "read the JSON payload from a file ('-' = stdin)");
        cmd->add_option("--out", out_path, "write the report to a file (default stdout)");
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate f (at --t) or h (at --x)");
    eval_cmd->add_option("--pair", pair_text, "exponent pair JSON");
    eval_cmd->add_option("--t", arg_t)->each([&](const std::string&) { have_t = true; });
    eval_cmd->add_option("--x", arg_x)->each([&](const std::string&) { have_x = true; });
    add_io(eval_cmd);

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix report of h at sample points");
    gram_cmd->add_option("--pair", pair_text);
    gram_cmd->add_option("--points", points_text, "comma-separated points, e.g. 0,1/3,2/3,1")
        ->required();
    add_io(gram_cmd);

    auto* probe_cmd = app.add_subcommand("probe", "search arithmetic grids for a Gram witness");
    probe_cmd->add_option("--pair", pair_text);
    probe_cmd->add_option("--spacings", points_text, "comma-separated spacings (default 1/3,1/2,1,2)");
    probe_cmd->add_option("--max-size", max_size);
    probe_cmd->add_option("--budget-ms", budget_ms);
    add_io(probe_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "verdict + machine-checkable certificate");
    classify_cmd->add_option("--pair", pair_text);
    classify_cmd->add_flag("--probe", probe, "enable bounded-effort numeric probes");
    classify_cmd->add_option("--budget-ms", budget_ms);
    add_io(classify_cmd);

    auto* single_cmd = app.add_subcommand("classify-single", "exact region test for f_{a,b} <= f_{c,d}");
    single_cmd->add_option("a", arg_a)->required();
    single_cmd->add_option("b", arg_b)->required();
    single_cmd->add_option("c", arg_c)->required();
    single_cmd->add_option("d", arg_d)->required();
    add_io(single_cmd);

    auto* factorize_cmd = app.add_subcommand("factorize", "decompose h into elementary factors");
    factorize_cmd->add_option("--pair", pair_text);
    add_io(factorize_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "exact cosh/sinh expansion of sinh products");
    expand_cmd->add_option("--terms", terms_text, "sinh product terms JSON");
    add_io(expand_cmd);

    auto* certify_cmd = app.add_subcommand("certify", "expand and certify series nonnegativity");
    certify_cmd->add_option("--terms", terms_text, "sinh product terms JSON");
    certify_cmd->add_option("--k", certify_k, "check depth (default: dominance-based)");
    add_io(certify_cmd);

    auto* density_cmd = app.add_subcommand("density", "Kosaki density report");
    density_cmd->add_option("--pairing", pairing_text, "[{a,b,sign},...] JSON");
    density_cmd->add_option("--grid", grid_points);
    density_cmd
        ->add_option("--reconstruct", reconstruct_x, "also reconstruct log h at this x")
        ->each([&](const std::string&) { have_reconstruct = true; });
    add_io(density_cmd);

    auto* verify_cmd = app.add_subcommand("verify-mean", "seeded norm-inequality trials");
    verify_cmd->add_option("--lhs", lhs_text, "left pair JSON")->required();
    verify_cmd->add_option("--rhs", rhs_text, "right pair JSON")->required();
    verify_cmd->add_option("--n", dim, "matrix dimension");
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
    verify_cmd->add_flag("--csv", csv, "emit per-trial CSV instead of JSON");
    verify_cmd->add_option("--out", out_path);

    auto* repro_cmd = app.add_subcommand("repro", "run a named reproduction bundle");
    repro_cmd->add_option("name", repro_name,
                          "example-2.9 | example-2.10 | mcintosh | remark-factorizations | "
                          "theorem-1.2-grid")
        ->required();
    repro_cmd->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!have_seed) seed = default_seed();

        if (eval_cmd->parsed()) {
            const ExponentPair pair = io::parse_pair_text(read_payload(pair_text, in_path));
            if (have_t == have_x) throw io::ParseError("pass exactly one of --t or --x");
            const double value = have_t ? eval_f(pair, arg_t) : eval_h(pair, arg_x);
            json out{{"value", value}, {"gamma", format_rational(pair.gamma())}};
            if (have_t) out["t"] = arg_t;
            if (have_x) out["x"] = arg_x;
            write_output(out_path, out.dump(2));
        } else if (gram_cmd->parsed()) {
            const ExponentPair pair = io::parse_pair_text(read_payload(pair_text, in_path));
            const auto points = io::parse_number_list(points_text);
            const ExponentPairD pd = to_double(pair);
            const auto report =
                gram_report([&](double x) { return eval_h(pd, x); }, points);
            write_output(out_path, io::to_json(report).dump(2));
        } else if (probe_cmd->parsed()) {
            const ExponentPair pair = io::parse_pair_text(read_payload(pair_text, in_path));
            std::vector<double> spacings{1.0 / 3.0, 0.5, 1.0, 2.0};
            if (!points_text.empty()) spacings = io::parse_number_list(points_text);
            const ExponentPairD pd = to_double(pair);
            const auto deadline = std::chrono::steady_clock::now() +
                                  std::chrono::milliseconds(budget_ms);
            const auto witness = gram_probe([&](double x) { return eval_h(pd, x); }, spacings,
                                            max_size, 1e-8, deadline);
            json out = witness ? json{{"witness", io::to_json(*witness)}}
                               : json{{"witness", nullptr}};
            write_output(out_path, out.dump(2));
        } else if (classify_cmd->parsed()) {
            const ExponentPair pair = io::parse_pair_text(read_payload(pair_text, in_path));
            ClassifyOptions options;
            options.probe = probe;
            options.budget_ms = budget_ms;
            const Classification result = classify(pair.alpha, pair.beta, options);
            write_output(out_path, io::to_json(result).dump(2));
        } else if (single_cmd->parsed()) {
            const bool ordered = classify_single(arg_a, arg_b, arg_c, arg_d);
            write_output(out_path, json{{"a", arg_a},
                                        {"b", arg_b},
                                        {"c", arg_c},
                                        {"d", arg_d},
                                        {"dominated", ordered}}
                                       .dump(2));
        } else if (factorize_cmd->parsed()) {
            const ExponentPair pair = io::parse_pair_text(read_payload(pair_text, in_path));
            const FactorizationQ factorization = factorize(pair.alpha, pair.beta);
            write_output(out_path, io::to_json(factorization).dump(2));
        } else if (expand_cmd->parsed()) {
            const auto terms = io::parse_sinh_terms(
                parse_json_text(read_payload(terms_text, in_path), "terms"));
            const auto rescaled = rescale_to_integers(terms);
            const CoshExpansion expansion = expand(rescaled.terms);
            json out = io::to_json(expansion);
            out["scale"] = format_rational(rescaled.scale);
            write_output(out_path, out.dump(2));
        } else if (certify_cmd->parsed()) {
            const auto terms = io::parse_sinh_terms(
                parse_json_text(read_payload(terms_text, in_path), "terms"));
            const auto rescaled = rescale_to_integers(terms);
            const CoshExpansion expansion = expand(rescaled.terms);
            unsigned depth = certify_k;
            if (depth == 0) depth = default_certify_depth(expansion).value_or(16);
            const PositivityCertificate cert = certify_nonnegative(expansion, depth);
            json out = io::to_json(cert);
            out["scale"] = format_rational(rescaled.scale);
            write_output(out_path, out.dump(2));
            return cert.verdict == CertVerdict::Refuted ? kExitCheckFailed : kExitOk;
        } else if (density_cmd->parsed()) {
            const auto pairing = io::parse_density_pairing(
                parse_json_text(read_payload(pairing_text, in_path), "pairing"));
            const CombinedDensity density = combined_density(pairing);
            double slowest = 1.0;
            for (const auto& term : density.terms)
                slowest = std::max(slowest, std::max(term.a, term.b));
            const GridCheck check = check_nonneg_grid(density, 20.0 * slowest, grid_points);
            json out{{"regularized", density.regularized},
                     {"nonneg_on_grid", check.nonneg},
                     {"min_t2_density", check.min_value},
                     {"min_location", check.min_location}};
            if (have_reconstruct)
                out["log_h"] = json{{"x", reconstruct_x},
                                    {"value", reconstruct_log_h(density, reconstruct_x)}};
            write_output(out_path, out.dump(2));
        } else if (verify_cmd->parsed()) {
            const ExponentPair lhs = io::parse_pair_text(read_payload(lhs_text, ""));
            const ExponentPair rhs = io::parse_pair_text(read_payload(rhs_text, ""));
            const VerifyReport report = verify_inequality(lhs, rhs, dim, trials, seed);
            if (csv) {
                std::ostringstream out;
                out << "trial,pass,margin";
                for (int k = 1; k <= dim; ++k) out << ",lhs_kyfan" << k;
                out << ",lhs_frobenius";
                for (int k = 1; k <= dim; ++k) out << ",rhs_kyfan" << k;
                out << ",rhs_frobenius\n";
                for (const auto& t : report.trials) {
                    out << t.trial << "," << (t.pass ? 1 : 0) << ","
                        << io::format_double(t.margin);
                    for (double v : t.lhs_norms) out << "," << io::format_double(v);
                    for (double v : t.rhs_norms) out << "," << io::format_double(v);
                    out << "\n";
                }
                write_output(out_path, out.str());
            } else {
                write_output(out_path, io::to_json(report, seed, dim).dump(2));
            }
            return report.failures == 0 ? kExitOk : kExitCheckFailed;
        } else if (repro_cmd->parsed()) {
            return run_repro(repro_name, seed);
        }
        return kExitOk;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

namespace {

int run_repro(const std::string& name, std::uint64_t seed) {
    std::vector<ReproCheck> checks;
    bool all_pass = true;

    if (name == "example-2.9") {
        const ExponentPair pair({8, 6, 3}, {9, 4, 4});
        const double expected[] = {0.9780192940, 0.9908829679, 0.9981846167};
        const double xs[] = {1.0 / 3.0, 2.0 / 3.0, 1.0};
        for (int i = 0; i < 3; ++i) {
            const double got = eval_h(pair, xs[i]);
            checks.push_back({"h(" + std::to_string(xs[i]) + ") ~ " +
                                  io::format_double(expected[i]),
                              std::fabs(got - expected[i]) <= 1e-9,
                              "measured " + io::format_double(got)});
        }
        const ExponentPairD pd = to_double(pair);
        const double points[] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
        const auto report = gram_report([&](double x) { return eval_h(pd, x); }, points);
        checks.push_back({"det ~ -0.0000095", std::fabs(report.determinant + 0.0000095) <= 1e-7,
                          "measured " + io::format_double(report.determinant)});
        checks.push_back({"negative minimum eigenvalue", report.min_eigenvalue < 0.0,
                          "measured " + io::format_double(report.min_eigenvalue)});
        const Classification verdict = classify(pair.alpha, pair.beta);
        checks.push_back({"classify: not-positive-definite with a Gram witness",
                          verdict.verdict == Verdict::NotPositiveDefinite &&
                              verdict.rule == Rule::GramWitness,
                          std::string(rule_name(verdict.rule))});
    } else if (name == "example-2.10") {
        const TupleQ alpha{8, 6, 1}, beta{9, 4, 4};
        const auto terms = density_numerator_terms(alpha, beta);
        const auto rescaled = rescale_to_integers(terms);
        const CoshExpansion expansion = expand(rescaled.terms);
        checks.push_back({"12-term expansion", expansion.terms.size() == 12,
                          std::to_string(expansion.terms.size()) + " terms"});
        const PositivityCertificate cert = certify_nonnegative(expansion, 9);
        checks.push_back({"certified at K = 9", cert.verdict == CertVerdict::Certified, ""});
        bool head_nonneg = true;
        for (unsigned k = 0; k <= 8; ++k)
            if (cert.coefficients[k] < 0) head_nonneg = false;
        checks.push_back({"c_0..c_8 >= 0 exactly", head_nonneg, ""});
        const Rational ratio = 8 * cert.coefficients[9] / rational_pow(Rational(103), 18);
        checks.push_back({"c_9 / 103^18 >= 0.06", ratio >= Rational(6, 100),
                          "measured " + io::format_double(to_double(ratio))});
        const Classification verdict = classify(alpha, beta);
        checks.push_back({"classify: infinitely-divisible with a density certificate",
                          verdict.verdict == Verdict::InfinitelyDivisible &&
                              verdict.rule == Rule::DensityCertificate,
                          std::string(rule_name(verdict.rule))});
    } else if (name == "mcintosh") {
        const ExponentPair geometric({1}, {1});
        const ExponentPair arithmetic({2}, {1});
        const VerifyReport report = verify_inequality(geometric, arithmetic, 3, 100, seed);
        checks.push_back({"100/100 trials pass", report.failures == 0,
                          std::to_string(100 - report.failures) + "/100"});
        checks.push_back({"combined tuples weakly submajorized", !report.exploratory, ""});
    } else if (name == "remark-factorizations") {
        const std::pair<TupleQ, TupleQ> cases[] = {
            {{6, 5, 3}, {9, 4, 1}},
            {{7, 5, 4}, {9, 6, 1}},
        };
        for (const auto& [alpha, beta] : cases) {
            const FactorizationQ factorization = factorize(alpha, beta);
            const ExponentPairD pd(to_double(alpha), to_double(beta));
            double worst = 0.0;
            for (int i = 0; i <= 100; ++i) {
                const double x = -5.0 + 0.1 * i;
                if (x == 0.0) continue;
                const double direct = eval_h(pd, x);
                const double product = factorization_value(factorization, x);
                worst = std::max(worst, std::fabs(product - direct) / direct);
            }
            checks.push_back({"reconstruction within 1e-11", worst <= 1e-11,
                              "max rel err " + io::format_double(worst)});
            bool valid = true;
            for (const auto& f : factorization.factors)
                if (f.kind == ElementaryFactorQ::Kind::Quad &&
                    !lemma23_check(f.a, f.c, f.b, f.d))
                    valid = false;
            checks.push_back({"all quads satisfy the lemma condition", valid, ""});
        }
    } else if (name == "theorem-1.2-grid") {
        int mismatches = 0, total = 0;
        for (int ia = 0; ia <= 8; ++ia)
            for (int ib = 0; ib <= 8; ++ib)
                for (int ic = 0; ic <= 8; ++ic)
                    for (int id = 0; id <= 8; ++id) {
                        const double a = ia * 0.5, b = ib * 0.5, c = ic * 0.5, d = id * 0.5;
                        ++total;
                        const double n1 = std::max(a, d), n2 = std::min(a, d);
                        const double m1 = std::max(b, c), m2 = std::min(b, c);
                        if (classify_single(a, b, c, d) != two_factor_criterion(n1, n2, m1, m2))
                            ++mismatches;
                    }
        checks.push_back({"region formulas match the two-factor criterion on the grid",
                          mismatches == 0,
                          std::to_string(total - mismatches) + "/" + std::to_string(total)});
    } else {
        std::cerr << "error: unknown repro bundle '" << name << "'\n";
        return kExitUsage;
    }

    print_checks(checks, &all_pass);
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace
