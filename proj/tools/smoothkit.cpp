#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smooth/fractal.hpp"
#include "smooth/freq.hpp"
#include "smooth/verify.hpp"
#include "smooth/word13.hpp"

using nlohmann::json;
using namespace smooth;

namespace {

std::string read_word_arg(const std::string& arg) {
    if (!arg.empty()) return arg;
    std::string line;
    std::getline(std::cin, line);
    return line;
}

AlphabetParams parse_alphabet(const std::string& s) {
    AlphabetParams p;
    if (s.empty()) return p;
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("alphabet must look like \"1,3\"");
    p.alpha = std::stoi(s.substr(0, comma));
    p.beta = std::stoi(s.substr(comma + 1));
    p.validate();
    return p;
}

long long env_budget() {
    const char* v = std::getenv("SMOOTHKIT_BUDGET");
    return v ? std::atoll(v) : (1LL << 20);
}

bool is_13_word(const std::string& w) {
    return w.find_first_of("13") != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"smoothkit: run-length smooth sequences over {1,3}"};
    app.require_subcommand(1);

    std::string word, tau_text, alphabet_text;
    std::string format = "text", fractal_format = "csv";
    int depth = 13, rank = 8, n = 2, samples = 100000;
    double tol = 1e-12, ptol = 1e-6;
    unsigned long long seed = 0;
    bool edges_complete = false;

    CLI::App* cmd_derive = app.add_subcommand("derive", "iterated run-length derivatives of a window");
    cmd_derive->add_option("--word", word, "window over {1,3}, '|' marks the origin (stdin if absent)");
    cmd_derive->add_flag("--edges-complete", edges_complete, "trust that the edge runs are not truncated");
    cmd_derive->add_option("--depth", depth, "maximum number of derivative steps");
    cmd_derive->add_option("--format", format, "text or json");

    CLI::App* cmd_recode = app.add_subcommand("recode", "run-alphabet encoding of a window");
    cmd_recode->add_option("--word", word, "window over {1,3} (stdin if absent)");
    cmd_recode->add_flag("--edges-complete", edges_complete, "trust that the edge runs are not truncated");
    cmd_recode->add_option("--format", format, "text or json");

    CLI::App* cmd_type = app.add_subcommand("type", "type bits of the derivative tower");
    cmd_type->add_option("--word", word, "window over {1,3} or over ABCD (stdin if absent)");
    int type_depth = 0;
    cmd_type->add_option("--depth", type_depth, "levels to report (0 = as many as the window allows)");

    CLI::App* cmd_construct = app.add_subcommand("construct", "canonical element of the subshift of tau");
    cmd_construct->add_option("--tau", tau_text, "type spec, e.g. \"0001(1)\"")->required();
    cmd_construct->add_option("--n", n, "construction depth");

    CLI::App* cmd_freq = app.add_subcommand("freq", "letter and symbol frequencies for tau");
    cmd_freq->add_option("--tau", tau_text, "type spec")->required();
    cmd_freq->add_option("--tol", tol, "fixed-point tolerance");
    cmd_freq->add_option("--alphabet", alphabet_text, "run alphabet \"a,b\" (default 1,3)");

    CLI::App* cmd_pattern = app.add_subcommand("pattern-freq", "frequency of a finite pattern");
    cmd_pattern->add_option("--tau", tau_text, "type spec")->required();
    cmd_pattern->add_option("--word", word, "pattern over ABCD or over {1,3}")->required();
    cmd_pattern->add_option("--tol", ptol, "bracket tolerance");

    CLI::App* cmd_fractal = app.add_subcommand("fractal", "rank-n cells of the frequency attractor");
    cmd_fractal->add_option("--rank", rank, "number of branch levels");
    cmd_fractal->add_option("--format", fractal_format, "csv, svg or json");
    cmd_fractal->add_option("--alphabet", alphabet_text, "run alphabet \"a,b\" (default 1,3)");

    CLI::App* cmd_probe = app.add_subcommand("probe", "Lipschitz/Jacobian probe of the homographies");
    cmd_probe->add_option("--alphabet", alphabet_text, "run alphabet \"a,b\" (default 1,3)");
    cmd_probe->add_option("--samples", samples, "number of sampled pairs");
    cmd_probe->add_option("--seed", seed, "rng seed");

    app.add_subcommand("verify", "run the full property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (cmd_derive->parsed()) {
            Word13 x = parse_word13(read_word_arg(word));
            x.left_complete = x.right_complete = edges_complete;
            json levels = json::array();
            for (int k = 0; k < depth; ++k) {
                try {
                    x = derive_window(x);
                } catch (const Error&) {
                    if (k == 0) throw;
                    break;
                }
                if (format == "json") {
                    auto [tlo, thi] = trusted_interval(x);
                    std::string syms;
                    for (std::uint8_t s : x.syms) syms.push_back(s == 1 ? '1' : '3');
                    levels.push_back({{"lo", x.lo},
                                      {"hi", x.hi()},
                                      {"symbols", syms},
                                      {"trusted", {tlo, thi}}});
                } else {
                    std::cout << format_word13(x) << "\n";
                }
            }
            if (format == "json") std::cout << levels.dump(2) << "\n";
        } else if (cmd_recode->parsed()) {
            Word13 x = parse_word13(read_word_arg(word));
            x.left_complete = x.right_complete = edges_complete;
            RecWord y = rec(x);
            if (format == "json") {
                json out = {{"lo", y.lo},
                            {"hi", y.hi()},
                            {"symbols", y.syms},
                            {"trusted", {y.lo, y.hi()}}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << format_recword(y) << "\n";
            }
        } else if (cmd_type->parsed()) {
            std::string text = read_word_arg(word);
            RecWord y;
            if (is_13_word(text)) {
                Word13 x = parse_word13(text);
                y = rec(x);
            } else {
                y = parse_recword(text);
                y.left_complete = y.right_complete = true;
            }
            std::string bits;
            if (type_depth > 0) {
                bits = types_prefix(y, type_depth);
            } else {
                for (;;) {
                    try {
                        TypeGuess g = type_of(y);
                        if (g == TypeGuess::indeterminate) break;
                        bits.push_back(g == TypeGuess::zero ? '0' : '1');
                        y = induced_derive(y);
                    } catch (const Error&) {
                        break;
                    }
                }
                if (bits.empty()) throw IndeterminateType(0);
            }
            std::cout << bits << "\n";
        } else if (cmd_construct->parsed()) {
            TypeSpec tau = TypeSpec::parse(tau_text);
            std::cout << format_recword(canonical_element(tau, n)) << "\n";
        } else if (cmd_freq->parsed()) {
            TypeSpec tau = TypeSpec::parse(tau_text);
            AlphabetParams params = parse_alphabet(alphabet_text);
            FreqReport r = freq_report(tau, tol, params);
            json out = {{"tau", tau.str()},
                        {"alphabet", {params.alpha, params.beta}},
                        {"a", r.a},
                        {"b", r.b},
                        {"c", r.c},
                        {"d", r.d},
                        {"f_ones", r.f_ones},
                        {"err", r.err}};
            try {
                out["minimal"] = minimality(tau);
                std::string letters;
                for (char c : degenerate_letters(tau)) letters.push_back(c);
                out["degenerate_letters"] = letters;
            } catch (const Undecidable&) {
                out["minimal"] = nullptr;
                out["degenerate_letters"] = nullptr;
            }
            std::cout << out.dump(2) << "\n";
        } else if (cmd_pattern->parsed()) {
            TypeSpec tau = TypeSpec::parse(tau_text);
            FreqValue v = is_13_word(word) ? pattern_freq_x(tau, word, ptol)
                                           : pattern_freq_rec(tau, word, ptol);
            json out = {{"tau", tau.str()}, {"word", word}, {"value", v.value}, {"err", v.err}};
            std::cout << out.dump(2) << "\n";
        } else if (cmd_fractal->parsed()) {
            AlphabetParams params = parse_alphabet(alphabet_text);
            std::vector<FractalCell> cells = enumerate_cells(rank, params, env_budget());
            if (fractal_format == "csv") std::cout << emit_csv(cells, params);
            else if (fractal_format == "svg") std::cout << emit_svg(cells, params);
            else if (fractal_format == "json") std::cout << emit_json(cells, params);
            else throw ParseError("unknown format: " + fractal_format);
        } else if (cmd_probe->parsed()) {
            AlphabetParams params = parse_alphabet(alphabet_text);
            ProbeReport rep = contraction_probe(params, samples, seed);
            json out = {{"alphabet", {params.alpha, params.beta}},
                        {"samples", rep.samples},
                        {"max_ratio", rep.max_ratio},
                        {"max_jacobian", rep.max_jacobian},
                        {"contracting", rep.max_ratio <= 2.0 / 3.0 + 1e-12}};
            std::cout << out.dump(2) << "\n";
        } else { // verify
            int failures = run_verify(std::cout);
            if (failures > 0) {
                std::cout << failures << " checks failed\n";
                return 3;
            }
            std::cout << "all checks passed\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
