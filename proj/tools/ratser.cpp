// Command-line surface for the rational-series library: evaluation,
// minimization, hulls, determinization, disambiguation, rational
// expressions, exponent formulas, Hadamard sub-inverses, progression forms,
// and diagnostics. Exit codes: 0 success, 1 usage or parse error,
// 2 structured analysis failure (evidence printed on stdout).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ratser/diagnostics.hpp"
#include "ratser/elim.hpp"
#include "ratser/formula.hpp"
#include "ratser/io.hpp"
#include "ratser/minimize.hpp"
#include "ratser/univariate.hpp"

namespace {

using namespace ratser;

struct AnalysisFailure {
    std::string evidence;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

// Accepts either format; reps become their associated automaton.
Wfa load_as_wfa(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_wfa(text);
    } catch (const ParseError&) {
        return to_wfa(parse_linear_rep(text));
    }
}

LinearRep load_as_rep(const std::string& path) {
    return parse_rep_or_wfa(read_file(path));
}

int run(int argc, char** argv) {
    CLI::App app{"rational series over weighted automata"};
    app.require_subcommand(1);

    std::string file;
    std::string word_text;
    std::string out_path;
    std::string ratfun_text;
    std::string check_kind;
    std::size_t maxlen = 10;
    std::size_t c = 2;
    std::uint64_t budget = 1'000'000;

    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to a file");
    };

    auto* cmd_eval = app.add_subcommand("eval", "coefficient of one word");
    cmd_eval->add_option("file", file)->required();
    cmd_eval->add_option("word", word_text, "letters, or _ for the empty word")
        ->required();
    add_out(cmd_eval);

    auto* cmd_coeffs = app.add_subcommand("coeffs", "coefficients up to a length");
    cmd_coeffs->add_option("file", file)->required();
    cmd_coeffs->add_option("--maxlen", maxlen);
    add_out(cmd_coeffs);

    auto* cmd_minimize = app.add_subcommand("minimize", "minimal representation");
    cmd_minimize->add_option("file", file)->required();
    add_out(cmd_minimize);

    auto* cmd_hull = app.add_subcommand("hull", "linear hull of a representation");
    cmd_hull->add_option("file", file)->required();
    cmd_hull->add_option("--budget", budget);
    add_out(cmd_hull);

    auto* cmd_det = app.add_subcommand("determinize", "deterministic automaton");
    cmd_det->add_option("file", file)->required();
    cmd_det->add_option("--budget", budget);
    add_out(cmd_det);

    auto* cmd_dis = app.add_subcommand("disambiguate", "unambiguous automaton");
    cmd_dis->add_option("file", file)->required();
    cmd_dis->add_option("--budget", budget);
    add_out(cmd_dis);

    auto* cmd_expr = app.add_subcommand("to-expr", "unambiguous rational expression");
    cmd_expr->add_option("file", file)->required();
    add_out(cmd_expr);

    auto* cmd_formula = app.add_subcommand("extract-formula", "exponent formula");
    cmd_formula->add_option("file", file)->required();
    add_out(cmd_formula);

    auto* cmd_hinv = app.add_subcommand("hadamard-inverse", "Hadamard sub-inverse");
    cmd_hinv->add_option("file", file)->required();
    add_out(cmd_hinv);

    auto* cmd_apform = app.add_subcommand("apform", "arithmetic-progression form");
    cmd_apform->add_option("file", file);
    cmd_apform->add_option("--ratfun", ratfun_text, "rational function literal P/Q");
    cmd_apform->add_option("--budget", budget);
    add_out(cmd_apform);

    auto* cmd_check = app.add_subcommand("check", "analysis probes");
    cmd_check->add_option("kind", check_kind, "deterministic|unambiguous|polya|variation")
        ->required();
    cmd_check->add_option("file", file)->required();
    cmd_check->add_option("--maxlen", maxlen);
    cmd_check->add_option("--c", c);
    add_out(cmd_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Error& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1, --help exits 0
    }

    try {
        if (cmd_eval->parsed()) {
            const LinearRep r = load_as_rep(file);
            const Word w = parse_word(r.alphabet(), word_text);
            write_output(evaluate(r, w).to_string() + "\n", out_path);
        } else if (cmd_coeffs->parsed()) {
            const LinearRep r = load_as_rep(file);
            std::string out;
            for (const Word& w : words_up_to(r.alphabet(), maxlen))
                out += format_word(r.alphabet(), w) + " " + evaluate(r, w).to_string() +
                       "\n";
            write_output(out, out_path);
        } else if (cmd_minimize->parsed()) {
            write_output(serialize(minimize(load_as_rep(file)).rep), out_path);
        } else if (cmd_hull->parsed()) {
            const HullResult h = linear_hull(load_as_rep(file), HullOptions{budget});
            write_output(hull_report(h.hull), out_path);
        } else if (cmd_det->parsed()) {
            try {
                write_output(serialize(determinize(load_as_rep(file),
                                                   TransformOptions{budget})),
                             out_path);
            } catch (const HullDimensionExceeded& e) {
                throw AnalysisFailure{hull_report(e.hull())};
            }
        } else if (cmd_dis->parsed()) {
            const LinearRep r = load_as_rep(file);
            try {
                write_output(serialize(disambiguate(r, TransformOptions{budget})),
                             out_path);
            } catch (const CoverConditionViolated& e) {
                throw AnalysisFailure{e.violation().to_string(r.alphabet()) + "\n"};
            }
        } else if (cmd_expr->parsed()) {
            const Wfa a = load_as_wfa(file);
            try {
                write_output(serialize_expr_file(*state_elimination(a)), out_path);
            } catch (const AmbiguousInput& e) {
                throw AnalysisFailure{"ambiguous witness " +
                                      format_word(a.alphabet(), e.witness()) + "\n"};
            }
        } else if (cmd_formula->parsed()) {
            const ExprPtr e = parse_expr_file(read_file(file));
            try {
                write_output(serialize(extract_formula(*e)), out_path);
            } catch (const NotUnambiguous&) {
                throw AnalysisFailure{"expression carries a non-unambiguous node\n"};
            }
        } else if (cmd_hinv->parsed()) {
            const Wfa a = load_as_wfa(file);
            try {
                write_output(serialize(hadamard_subinverse(a)), out_path);
            } catch (const AmbiguousInput& e) {
                throw AnalysisFailure{"ambiguous witness " +
                                      format_word(a.alphabet(), e.witness()) + "\n"};
            }
        } else if (cmd_apform->parsed()) {
            if (file.empty() == ratfun_text.empty())
                throw CLI::ValidationError("apform needs exactly one of file, --ratfun");
            try {
                APForm form;
                if (!ratfun_text.empty()) {
                    form = univariate_pipeline(parse_ratfun(ratfun_text),
                                               TransformOptions{budget});
                } else {
                    const std::string text = read_file(file);
                    bool handled = false;
                    try {
                        const Wfa a = parse_wfa(text);
                        if (is_unambiguous(trim(a))) {
                            form = extract_ap_form(trim(a));
                            handled = true;
                        }
                    } catch (const ParseError&) {
                    }
                    if (!handled) {
                        const LinearRep r = parse_rep_or_wfa(text);
                        const Wfa unambiguous =
                            disambiguate(minimize(r).rep, TransformOptions{budget});
                        form = extract_ap_form(unambiguous);
                    }
                }
                write_output(serialize(form), out_path);
            } catch (const HullDimensionExceeded& e) {
                throw AnalysisFailure{hull_report(e.hull())};
            } catch (const CoverConditionViolated& e) {
                throw AnalysisFailure{e.violation().to_string(Alphabet("x")) + "\n"};
            }
        } else if (cmd_check->parsed()) {
            if (check_kind == "deterministic") {
                const Wfa a = load_as_wfa(file);
                if (is_deterministic(a)) {
                    write_output("deterministic true\n", out_path);
                } else {
                    throw AnalysisFailure{"deterministic false\n"};
                }
            } else if (check_kind == "unambiguous") {
                const Wfa a = load_as_wfa(file);
                if (const auto w = ambiguity_witness(a)) {
                    throw AnalysisFailure{"unambiguous false witness " +
                                          format_word(a.alphabet(), *w) + "\n"};
                }
                write_output("unambiguous true\n", out_path);
            } else if (check_kind == "polya") {
                write_output(polya_support(load_as_rep(file), maxlen).to_string() + "\n",
                             out_path);
            } else if (check_kind == "variation") {
                const LinearRep r = load_as_rep(file);
                write_output(variation_report(r, c, maxlen).to_string(r.alphabet()) +
                                 "\n",
                             out_path);
            } else {
                throw CLI::ValidationError("unknown check '" + check_kind + "'");
            }
        }
    } catch (const AnalysisFailure& failure) {
        std::cout << failure.evidence;
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cout << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
