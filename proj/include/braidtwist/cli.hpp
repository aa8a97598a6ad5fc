#pragma once

// Command-line front end. Exit status: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidtwist/braidtwist.hpp"
#include "braidtwist/corpus.hpp"
#include "braidtwist/json_io.hpp"

namespace braidtwist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// BRAIDTWIST_STEP_CAP overrides the built-in handle-reduction cap.
inline std::uint64_t default_step_cap() {
    if (const char* env = std::getenv("BRAIDTWIST_STEP_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("BRAIDTWIST_STEP_CAP is not a number: ") + env);
        }
    }
    return kDefaultStepCap;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out.push_back(' ');
        out += p;
    }
    return out;
}

inline std::string interval_text(const std::pair<Rational, Rational>& iv) {
    return "[" + to_string(iv.first) + ", " + to_string(iv.second) + "]";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dehornoy order, Dehornoy floor and fractional Dehn twist coefficients of braids", "braidtwist"};
    app.fallthrough();
    app.require_subcommand(1);

    bool as_json = false;
    std::optional<std::uint64_t> cap_flag;
    app.add_flag("--json", as_json, "Emit JSON instead of text");
    app.add_option("--cap", cap_flag, "Handle-reduction step cap (default 1e7 or $BRAIDTWIST_STEP_CAP)");

    int strands = 0;
    const auto add_strands = [&strands](CLI::App* sub) {
        sub->add_option("-n,--strands", strands, "Number of strands")->required();
    };

    std::vector<std::string> word_parts;
    auto* cmd_parse = app.add_subcommand("parse", "Validate a word and print its canonical form");
    add_strands(cmd_parse);
    cmd_parse->add_option("word", word_parts, "Braid word")->expected(0, -1);

    auto* cmd_sign = app.add_subcommand("sign", "Compare a braid with the identity (LT | EQ | GT)");
    add_strands(cmd_sign);
    cmd_sign->add_option("word", word_parts, "Braid word")->expected(0, -1);

    std::string lhs_text;
    std::string rhs_text;
    auto* cmd_compare = app.add_subcommand("compare", "Dehornoy comparison of two braids (LT | EQ | GT)");
    add_strands(cmd_compare);
    cmd_compare->add_option("a", lhs_text, "First word")->required();
    cmd_compare->add_option("b", rhs_text, "Second word")->required();

    auto* cmd_floor = app.add_subcommand("floor", "Dehornoy floor max{t : Delta^2t <= beta}");
    add_strands(cmd_floor);
    cmd_floor->add_option("word", word_parts, "Braid word")->expected(0, -1);

    auto* cmd_fdtc = app.add_subcommand("fdtc", "Exact fractional Dehn twist coefficient with certificate");
    add_strands(cmd_fdtc);
    cmd_fdtc->add_option("word", word_parts, "Braid word")->expected(0, -1);

    std::optional<std::string> g3_text, g4_text, g4_upper_text;
    std::optional<std::int64_t> qp_length;
    bool finite_order = false;
    std::string predicates_text;
    auto* cmd_bounds = app.add_subcommand("bounds", "tau/s bounds, sign certificates and genus audits");
    add_strands(cmd_bounds);
    cmd_bounds->add_option("word", word_parts, "Braid word")->expected(0, -1);
    cmd_bounds->add_option("--g3", g3_text, "Seifert genus of the closure");
    cmd_bounds->add_option("--g4", g4_text, "Slice genus of the closure");
    cmd_bounds->add_option("--g4-upper", g4_upper_text, "Upper bound on the slice genus");
    cmd_bounds->add_option("--qp-length", qp_length, "Quasipositive length of the braid");
    cmd_bounds->add_flag("--finite-order", finite_order, "Closure has finite concordance order");
    cmd_bounds->add_option("--predicates", predicates_text, "ito,question15,slice3,qp (default: all with inputs)");

    std::string syllable_text;
    bool require_qp = false;
    bool require_g4 = false;
    bool check_bound = false;
    auto* cmd_qp = app.add_subcommand("qp", "Syllable-form report: qp length, chi4, g4 and FDTC bounds");
    add_strands(cmd_qp);
    cmd_qp->add_option("syllables", syllable_text, "'w | i | +; w | i | -; ...'")->required();
    cmd_qp->add_flag("--require-qp", require_qp, "Fail unless every syllable is positive");
    cmd_qp->add_flag("--require-g4", require_g4, "Fail unless g4 can be reported");
    cmd_qp->add_flag("--check", check_bound, "Also compute BT and check 0 <= BT <= m - 1");

    int murasugi_class = 0;
    std::int64_t murasugi_d = 0;
    std::vector<std::int64_t> murasugi_a;
    std::optional<std::int64_t> murasugi_m;
    auto* cmd_murasugi = app.add_subcommand("murasugi", "Murasugi normal form of a 3-braid: word, BT, QA status");
    cmd_murasugi->add_option("--class", murasugi_class, "Normal form class")->required()->check(CLI::Range(1, 3));
    cmd_murasugi->add_option("--d", murasugi_d, "Full-twist exponent")->required()->allow_extra_args(false);
    cmd_murasugi->add_option("--a", murasugi_a, "Class 1 exponents a_i")->delimiter(',');
    cmd_murasugi->add_option("--m", murasugi_m, "Class 2/3 exponent m")->allow_extra_args(false);

    std::string family_name;
    std::vector<std::string> family_params;
    int family_strands = 0;
    auto* cmd_family = app.add_subcommand("family", "Emit a family word: ktd M K | bttau K | torus P Q | fulltwists T WORD");
    cmd_family->add_option("name", family_name, "Family name")->required();
    cmd_family->add_option("params", family_params, "Family parameters")->expected(0, -1);
    cmd_family->add_option("-n,--strands", family_strands, "Strands (fulltwists only)");

    std::string corpus_path;
    std::string audit_predicates = "ito,question15,slice3,qp";
    unsigned threads = 0;
    auto* cmd_audit = app.add_subcommand("audit", "Audit a JSON-lines corpus (file or stdin)");
    cmd_audit->add_option("corpus", corpus_path, "Corpus file; '-' or omitted for stdin");
    cmd_audit->add_option("--predicates", audit_predicates, "Comma-separated predicate groups");
    cmd_audit->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    const auto word = [&] { return parse_word(detail::join(word_parts), strands); };

    try {
        FdtcOptions opts;
        opts.step_cap = cap_flag ? *cap_flag : default_step_cap();

        if (cmd_parse->parsed()) {
            const auto w = word();
            if (as_json) out << json(w).dump() << '\n';
            else out << to_text(w) << '\n';
        } else if (cmd_sign->parsed()) {
            const auto s = order_sign(word(), opts.step_cap);
            if (as_json) out << json{{"sign", s}}.dump() << '\n';
            else out << to_token(s) << '\n';
        } else if (cmd_compare->parsed()) {
            const auto s = compare(parse_word(lhs_text, strands), parse_word(rhs_text, strands), opts.step_cap);
            if (as_json) out << json{{"order", s}}.dump() << '\n';
            else out << to_token(s) << '\n';
        } else if (cmd_floor->parsed()) {
            const auto f = dehornoy_floor(word(), opts);
            if (as_json) out << json(f).dump() << '\n';
            else out << f.floor << '\n';
        } else if (cmd_fdtc->parsed()) {
            const auto r = fdtc_exact(word(), opts);
            if (as_json) {
                out << json(r).dump() << '\n';
            } else {
                out << to_string(r.value) << '\n';
                out << json{{"N", r.power_used}, {"floor", r.floor_of_power}, {"lo", r.lo}, {"hi", r.hi}}.dump()
                    << '\n';
            }
        } else if (cmd_bounds->parsed()) {
            const auto w = word();
            AuditInputs in;
            if (g3_text) in.g3 = parse_rational(*g3_text);
            if (g4_text) in.g4 = parse_rational(*g4_text);
            if (g4_upper_text) in.g4_upper = parse_rational(*g4_upper_text);
            if (finite_order) in.finite_concordance_order = true;
            in.qp_length = qp_length;

            PredicateSet which;
            if (!predicates_text.empty()) {
                which = parse_predicates(predicates_text);
            } else {
                which.ito = in.g3.has_value();
                which.question15 = in.g4 || in.g4_upper;
                which.slice3 = finite_order;
                which.qp = qp_length.has_value();
            }

            const auto tau_s = tau_s_bounds(w);
            const auto signs = word_sign_bounds(w);
            const auto destab = destab_bounds(w);
            std::optional<AuditRecord> audit;
            if (which.any()) audit = audit_bounds(w, in, which, opts);

            if (as_json) {
                json j = {{"tau_s", tau_s}, {"sign_bounds", signs}};
                if (destab) j["destab_bounds"] = {destab->first, destab->second};
                if (audit) j["audit"] = *audit;
                out << j.dump() << '\n';
            } else {
                out << "tau in " << detail::interval_text({tau_s.tau_lo, tau_s.tau_hi}) << '\n';
                out << "s in " << detail::interval_text({tau_s.s_lo, tau_s.s_hi}) << '\n';
                if (signs.lower_zero) out << "BT >= 0 (one-signed generator)\n";
                if (signs.upper_zero) out << "BT <= 0 (one-signed generator)\n";
                if (destab) out << "BT in " << detail::interval_text(*destab) << " (destabilization)\n";
                if (audit) {
                    out << "floor " << audit->floor << ", BT " << to_string(audit->fdtc.value) << '\n';
                    for (const auto& p : audit->results) out << json(p).dump() << '\n';
                }
            }
            if (audit) {
                for (const auto& p : audit->results) {
                    if (p.status == AuditStatus::Fail) return kExitDomain;
                }
            }
        } else if (cmd_qp->parsed()) {
            const auto s = parse_syllables(syllable_text, strands);
            const auto report = qp_report(s, QpReportOptions{require_qp, require_g4});
            std::optional<FdtcResult> bt;
            std::optional<bool> holds;
            if (check_bound) {
                holds = check_qp_bt_bound(s, opts);
                bt = fdtc_exact(expand(s), opts);
            }
            if (as_json) {
                json j = report;
                j["word"] = expand(s);
                if (bt) j["fdtc"] = *bt;
                if (holds) j["bound_holds"] = *holds;
                out << j.dump() << '\n';
            } else {
                out << "word: " << to_text(expand(s)) << '\n';
                out << "m = " << report.qp_length << " (p+ = " << report.positive_syllables
                    << ", p- = " << report.negative_syllables << ")\n";
                if (report.chi4) out << "chi4 = " << *report.chi4 << '\n';
                if (report.g4) out << "g4 = " << to_string(*report.g4) << '\n';
                if (report.bt_upper) out << "BT <= " << *report.bt_upper << '\n';
                out << "CONDITIONAL: " << to_string(report.cor_a_bounds.first) << " <= BT <= "
                    << to_string(report.cor_a_bounds.second) << '\n';
                if (bt) out << "BT = " << to_string(bt->value) << (*holds ? " (bound holds)" : " (BOUND VIOLATED)") << '\n';
            }
            if (holds && !*holds) return kExitDomain;
        } else if (cmd_murasugi->parsed()) {
            Murasugi3Form form;
            if (murasugi_class == 1) {
                if (murasugi_a.empty()) {
                    err << "class 1 needs --a\n";
                    return kExitUsage;
                }
                form = MurasugiClass1{murasugi_d, murasugi_a};
            } else {
                if (!murasugi_m) {
                    err << "classes 2 and 3 need --m\n";
                    return kExitUsage;
                }
                if (murasugi_class == 2) form = MurasugiClass2{murasugi_d, *murasugi_m};
                else form = MurasugiClass3{murasugi_d, *murasugi_m};
            }
            const auto w = to_word(form);
            const auto closed = fdtc_3braid(form);
            const auto engine = fdtc_exact(w, opts).value;
            const bool qa = is_quasi_alternating(form);
            if (as_json) {
                out << json{{"form", form}, {"word", w}, {"bt", closed}, {"engine_bt", engine},
                            {"cross_check", engine == closed}, {"quasi_alternating", qa}}
                           .dump()
                    << '\n';
            } else {
                out << "word: " << to_text(w) << '\n';
                out << "BT = " << to_string(closed) << '\n';
                out << "engine BT = " << to_string(engine) << (engine == closed ? " (agrees)" : " (MISMATCH)") << '\n';
                out << "quasi-alternating: " << (qa ? "yes" : "no") << '\n';
            }
            if (engine != closed) return kExitDomain;
        } else if (cmd_family->parsed()) {
            const auto param = [&](std::size_t i) -> std::int64_t {
                if (i >= family_params.size()) throw CLI::ValidationError("family", "missing parameter");
                try {
                    return std::stoll(family_params[i]);
                } catch (const std::exception&) {
                    throw CLI::ValidationError("family", "parameter '" + family_params[i] + "' is not an integer");
                }
            };
            const auto need = [&](std::size_t count) {
                if (family_params.size() != count) {
                    throw CLI::ValidationError("family", family_name + " takes " + std::to_string(count) + " parameters");
                }
            };
            FamilySpec spec;
            try {
                if (family_name == "ktd") {
                    need(2);
                    spec = FamilyKtd{param(0), param(1)};
                } else if (family_name == "bttau") {
                    need(1);
                    spec = FamilyBTtau{param(0)};
                } else if (family_name == "torus") {
                    need(2);
                    spec = FamilyTorus{param(0), param(1)};
                } else if (family_name == "fulltwists") {
                    if (family_params.empty()) throw CLI::ValidationError("family", "fulltwists needs T and a word");
                    if (family_strands < 2) throw CLI::ValidationError("family", "fulltwists needs --strands");
                    const std::vector<std::string> rest(family_params.begin() + 1, family_params.end());
                    spec = FamilyFullTwists{parse_word(detail::join(rest), family_strands), param(0)};
                } else {
                    throw CLI::ValidationError("family", "unknown family '" + family_name + "'");
                }
            } catch (const CLI::ValidationError& e) {
                err << e.what() << '\n';
                return kExitUsage;
            }
            const auto w = generate(spec);
            if (as_json) out << json(w).dump() << '\n';
            else out << to_text(w) << '\n';
        } else if (cmd_audit->parsed()) {
            const auto which = parse_predicates(audit_predicates);
            AuditSummary summary;
            if (corpus_path.empty() || corpus_path == "-") {
                summary = audit_stream(std::cin, out, which, opts, threads);
            } else {
                std::ifstream file(corpus_path);
                if (!file) throw braid_error("cannot open corpus '" + corpus_path + "'");
                summary = audit_stream(file, out, which, opts, threads);
            }
            if (summary.errors > 0 || summary.fail > 0) return kExitDomain;
        }
    } catch (const braid_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace braidtwist::cli
