// umbra: exact umbral-calculus toolbox.
//
// Subcommands:
//   family     construct a named polynomial family with its operators
//   construct  run the generalized construction on a user sequence
//   verify     run a verification suite (convolution, sheffer, cauchy,
//              generator, coalgebra, sym)
//
// Exit codes: 0 all checks pass, 1 violations found or contract failure on
// the input data, 2 usage or parse errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "umbra/analysis.hpp"
#include "umbra/families.hpp"
#include "umbra/json_io.hpp"
#include "umbra/symfunc.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;

namespace {

struct CliConfig {
    int trunc = 12;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string nu = "0";
    std::string alpha = "0";
    std::string a = "0";
    std::string c = "0";
    bool json() const { return format == "json"; }
};

FamilySpec make_spec(const std::string& name, const CliConfig& cfg) {
    FamilySpec spec{family_from_name(name), cfg.trunc};
    spec.nu = Rational::parse(cfg.nu);
    spec.alpha = Rational::parse(cfg.alpha);
    spec.a = Rational::parse(cfg.a);
    return spec;
}

json xd_to_json(const EndoOp& op) {
    json arr = json::array();
    for (const auto& a : expand_in_xd(op)) arr.push_back(to_json(a));
    return arr;
}

void print_report_text(const std::string& label, const VerifyReport& report) {
    if (report.ok) {
        std::cout << "ok: " << label << " (degrees " << report.checked_lo << ".."
                  << report.checked_hi << ")";
        if (!report.note.empty()) std::cout << " [" << report.note << "]";
        std::cout << "\n";
        return;
    }
    std::cout << "FAIL: " << label;
    if (!report.note.empty()) std::cout << " [" << report.note << "]";
    std::cout << "\n";
    for (const auto& v : report.violations)
        std::cout << "  degree " << v.degree << ": " << v.lhs << "  !=  " << v.rhs << "\n";
}

int finish(const std::vector<std::pair<std::string, VerifyReport>>& results,
           const CliConfig& cfg) {
    bool all_ok = true;
    if (cfg.json()) {
        json out = json::array();
        for (const auto& [label, report] : results) {
            json item = to_json(report);
            item["check"] = label;
            out.push_back(item);
            all_ok &= report.ok;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [label, report] : results) {
            print_report_text(label, report);
            all_ok &= report.ok;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_family(const std::string& name, const CliConfig& cfg) {
    const FamilySpec spec = make_spec(name, cfg);
    const PolySeq seq = family_sequence(spec);
    const EndoOp q = family_q(spec);
    const std::optional<EndoOp> p =
        family_has_p(spec.family) ? std::optional<EndoOp>(family_p(spec)) : std::nullopt;

    if (cfg.json()) {
        json out = {{"family", family_name(spec.family)},
                    {"trunc", spec.trunc},
                    {"polys", to_json(seq).at("polys")},
                    {"Q_xD", xd_to_json(q)}};
        if (p) out["P"] = to_json(*p);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "family: " << family_name(spec.family) << " (degree " << spec.trunc << ")\n";
    for (int n = 0; n <= spec.trunc; ++n)
        std::cout << "p_" << n << ": " << to_json(seq.at(n)).dump() << "\n";
    std::cout << "Q as sum of a_k(x) D^k: " << xd_to_json(q).dump() << "\n";
    if (p) {
        for (int n = 0; n <= spec.trunc; ++n)
            std::cout << "P x^" << n << ": " << to_json(p->image(n)).dump() << "\n";
    }
    return 0;
}

int cmd_construct(const std::string& input, bool random, const CliConfig& cfg) {
    json parsed;
    PolySeq seq(0, {Poly1::constant(Rational(1))});
    if (random) {
        seq = random_polyseq(cfg.seed, cfg.trunc);
    } else {
        try {
            if (input == "-") {
                parsed = json::parse(std::cin);
            } else {
                std::ifstream in(input);
                if (!in) {
                    std::cerr << "error: cannot open " << input << "\n";
                    return 2;
                }
                parsed = json::parse(in);
            }
        } catch (const json::parse_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        try {
            seq = polyseq_from_json(parsed);
        } catch (const json::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;  // structurally wrong JSON
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;  // well-formed input that violates the sequence contract
        }
    }

    const ShefferData data = generalized_sheffer(seq);
    json out = to_json(data);
    out["Q_xD"] = xd_to_json(data.Q);
    out["report"] = to_json(verify_convolution(data.F, seq));
    std::cout << out.dump(2) << "\n";
    return out["report"]["ok"].get<bool>() ? 0 : 1;
}

int verify_convolution_suite(const std::string& family, bool random, int count,
                             const CliConfig& cfg) {
    std::vector<std::pair<std::string, VerifyReport>> results;
    if (random) {
        for (int i = 0; i < count; ++i) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
            const PolySeq p = random_polyseq(seed, cfg.trunc);
            results.emplace_back("convolution (seed " + std::to_string(seed) + ")",
                                 verify_convolution(generalized_sheffer(p).F, p));
        }
    } else {
        results.emplace_back("convolution (" + family + ")",
                             family_convolution_check(make_spec(family, cfg)));
    }
    return finish(results, cfg);
}

int verify_sheffer_suite(const std::string& family, const CliConfig& cfg) {
    const FamilySpec spec = make_spec(family, cfg);
    std::vector<std::pair<std::string, VerifyReport>> results;
    results.emplace_back("sheffer equivalence (" + family + ")",
                         sheffer_theorem_check(family_f(spec), family_sequence(spec)));
    return finish(results, cfg);
}

int verify_cauchy_suite(const std::string& family, const CliConfig& cfg) {
    const FamilySpec spec = make_spec(family, cfg);
    const EndoOp q = family_q(spec);
    const PolySeq basic = basic_from_q(q);
    VerifyReport report;
    report.checked_hi = cfg.trunc;
    for (int j = 0; j <= cfg.trunc; ++j) {
        const CauchyWitness w = cauchy_solve(q, basic, Poly1::monomial(j));
        if (!w.residual.is_zero()) report.fail(j, w.residual.str(), "0");
        if (!w.initial_gap.is_zero())
            report.fail(j, "u(x,0) - p = " + w.initial_gap.str(), "0");
    }
    return finish({{"cauchy (" + family + ")", report}}, cfg);
}

int verify_generator_suite(const std::string& family, const CliConfig& cfg) {
    const FamilySpec spec = make_spec(family, cfg);
    const EndoOp q = family_q(spec);
    VerifyReport report;
    report.checked_hi = cfg.trunc;
    try {
        infinitesimal_generator(q, basic_from_q(q));
    } catch (const std::exception& e) {
        report.fail(0, e.what(), "generator identity");
    }
    return finish({{"generator (" + family + ")", report}}, cfg);
}

int verify_coalgebra_suite(const std::string& family, const std::optional<std::string>& c_flag,
                           const CliConfig& cfg) {
    std::vector<std::pair<std::string, VerifyReport>> results;
    if (c_flag) {
        const Rational c = Rational::parse(*c_flag);
        const BivarOp f = shift_bivar(cfg.trunc, -c);
        results.emplace_back("coassociativity (shift c=" + c.str() + ")",
                             coassociativity_check(f));
        VerifyReport detect;
        detect.checked_hi = cfg.trunc;
        const auto found = bialgebra_detect(f);
        if (found != c) detect.fail(0, found ? found->str() : "absent", c.str());
        results.emplace_back("bialgebra shift constant", detect);
        results.emplace_back("antipode axiom", antipode_check(c, cfg.trunc));
        return finish(results, cfg);
    }

    const FamilySpec spec = make_spec(family, cfg);
    const PolySeq seq = family_sequence(spec);
    const BivarOp f = family_f(spec);
    results.emplace_back("coassociativity (" + family + ")", coassociativity_check(f));
    results.emplace_back("cocommutativity (" + family + ")", cocommutativity_check(f, seq));
    VerifyReport counit;
    counit.checked_hi = cfg.trunc;
    try {
        const auto eps = counit_from_f(f);
        for (int k = 0; k <= cfg.trunc; ++k) {
            Rational value(0);
            for (int i = 0; i <= k; ++i) value += eps[i] * seq.at(k).coeff(i);
            if (value != Rational(k == 0 ? 1 : 0))
                counit.fail(k, value.str(), k == 0 ? "1" : "0");
        }
    } catch (const std::exception& e) {
        counit.fail(0, e.what(), "unique counit");
    }
    results.emplace_back("counit (" + family + ")", counit);
    return finish(results, cfg);
}

int verify_sym_suite(const std::optional<std::string>& sequence, const std::string& scale,
                     const CliConfig& cfg) {
    std::vector<std::pair<std::string, VerifyReport>> results;
    if (!sequence) {
        results.emplace_back("shift expansion E^a = sum a^n D_(n)",
                             shift_expansion_check(cfg.trunc));
        results.emplace_back("alternating e/h identity", sym_antipode_identity(cfg.trunc));
        return finish(results, cfg);
    }

    FullSeq s = [&]() {
        if (*sequence == "e") return full_elementary(cfg.trunc);
        if (*sequence == "h") return full_complete(cfg.trunc);
        if (*sequence == "m-conjugate") return full_m_conjugate(cfg.trunc);
        throw CLI::ValidationError("--sequence", "unknown sequence \"" + *sequence + "\"");
    }();
    const Rational factor = Rational::parse(scale);
    if (factor != Rational(1)) s = scale_fullseq(s, factor);

    const VerifyReport full = is_full_sequence(s);
    results.emplace_back("full sequence (" + *sequence + ")", full);
    if (full.ok) {
        results.emplace_back("full divided powers", verify_full_divided(s));
        const SymShefferReport sheffer = sym_sheffer_verify(s);
        VerifyReport sheffer_report = sheffer.details;
        if (sheffer.shift_invariant)
            sheffer_report.add_note("shift-invariant, c = " + sheffer.c->str());
        else
            sheffer_report.add_note("not shift-invariant");
        results.emplace_back("symmetric sheffer", sheffer_report);
    }
    return finish(results, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact umbral-calculus toolbox"};
    app.require_subcommand(1);
    CliConfig cfg;

    const auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("-n,--degree", cfg.trunc, "truncation degree")->check(CLI::NonNegativeNumber);
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", cfg.seed, "seed for random sequences");
        cmd->add_option("--nu", cfg.nu, "hermite variance (rational)");
        cmd->add_option("--alpha", cfg.alpha, "laguerre order (rational)");
        cmd->add_option("--a", cfg.a, "abel parameter (rational)");
    };

    auto* family_cmd = app.add_subcommand("family", "construct a named family");
    std::string family_name_arg;
    family_cmd->add_option("name", family_name_arg, "family name")->required();
    add_common(family_cmd);

    auto* construct_cmd = app.add_subcommand("construct", "run the generalized construction");
    std::string input = "-";
    bool random = false;
    construct_cmd->add_option("-i,--input", input, "sequence JSON file, - for stdin");
    construct_cmd->add_flag("--random", random, "use a seeded random sequence");
    add_common(construct_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd
        ->add_option("suite", suite, "convolution|sheffer|cauchy|generator|coalgebra|sym")
        ->required()
        ->check(CLI::IsMember({"convolution", "sheffer", "cauchy", "generator", "coalgebra", "sym"}));
    std::string family_flag = "powers";
    bool family_given = false;
    verify_cmd->add_option("--family", family_flag, "family name")
        ->each([&family_given](const std::string&) { family_given = true; });
    bool random_suite = false;
    int count = 1;
    verify_cmd->add_flag("--random", random_suite, "verify seeded random sequences");
    verify_cmd->add_option("--count", count, "number of random sequences");
    std::optional<std::string> sequence_flag;
    verify_cmd->add_option("--sequence", sequence_flag, "symmetric sequence: e|h|m-conjugate");
    std::string scale = "1";
    verify_cmd->add_option("--scale", scale, "scale factor for the symmetric sequence");
    std::optional<std::string> c_flag;
    verify_cmd->add_option("--c", c_flag, "shift constant for the coalgebra suite");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (family_cmd->parsed()) return cmd_family(family_name_arg, cfg);
        if (construct_cmd->parsed()) return cmd_construct(input, random, cfg);
        if (suite == "convolution") return verify_convolution_suite(family_flag, random_suite, count, cfg);
        if (suite == "sheffer") return verify_sheffer_suite(family_flag, cfg);
        if (suite == "cauchy") return verify_cauchy_suite(family_flag, cfg);
        if (suite == "generator") return verify_generator_suite(family_flag, cfg);
        if (suite == "coalgebra") return verify_coalgebra_suite(family_flag, c_flag, cfg);
        if (suite == "sym") return verify_sym_suite(sequence_flag, scale, cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
