#include "modasc/cli.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modasc/counting.hpp"
#include "modasc/error.hpp"
#include "modasc/export.hpp"
#include "modasc/patterns.hpp"
#include "modasc/report.hpp"
#include "modasc/suites.hpp"

namespace modasc {

namespace {

struct Globals {
    std::optional<std::size_t> n;
    std::optional<std::size_t> cap;
    std::string format;
    unsigned jobs = 1;
    bool seedless = false;
    bool timing = false;
};

std::string echo(int argc, const char* const* argv) {
    std::string s = "modasc";
    for (int i = 1; i < argc; ++i) {
        s += ' ';
        s += argv[i];
    }
    return s;
}

Caps resolve_caps(const Globals& g) {
    Caps c = caps_from_environment();
    if (g.cap) c = {*g.cap, *g.cap};
    return c;
}

std::size_t need_n(const Globals& g) {
    if (!g.n) throw InvalidInput("--n is required");
    return *g.n;
}

std::vector<CayleyPattern> patterns_or_none(const std::string& text) {
    if (text.empty()) return {};
    return parse_pattern_set(text);
}

void require_word_cap(std::size_t n, const Caps& caps) {
    if (n > caps.words) {
        throw CapExceeded("--n " + std::to_string(n) + " exceeds the word cap " + std::to_string(caps.words));
    }
}

int emit_report(RunReport& report, const Globals& g, std::chrono::steady_clock::time_point start,
                std::ostream& out) {
    if (g.timing) {
        report.set_elapsed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    if (g.format == "json") out << report.json();
    else if (g.format.empty() || g.format == "text") out << report.text();
    else throw InvalidInput("report format must be text or json");
    return report.exit_code();
}

RunReport make_report(const std::string& command, const Globals& g, const Caps& caps,
                      const std::vector<Check>& checks) {
    RunReport report(command, caps);
    if (g.seedless) {
        report.add({"seedless", "determinism", Status::pass, "no random number generator in use", std::nullopt});
    }
    for (auto& r : run_checks(checks, g.jobs)) report.add(std::move(r));
    return report;
}

CountTable build_table(const std::string& label, std::size_t n, const std::string& source, const Caps& caps) {
    // Either "<patterns>-<class>" or the name of a special series.
    const auto dash = label.rfind('-');
    if (dash != std::string::npos && dash + 1 < label.size() && (label.substr(dash + 1) == "modasc" || label.substr(dash + 1) == "prim")) {
        const SequenceClass c = parse_sequence_class(label.substr(dash + 1));
        const std::string pats = label.substr(0, dash);
        const auto ys = pats == "all" ? std::vector<CayleyPattern>{} : parse_pattern_set(pats);
        if (source == "formula") {
            if (ys.size() != 1) throw InvalidInput("formula tables take exactly one pattern");
            return formula_table(ys.front(), c, n);
        }
        if (source != "oracle") throw InvalidInput("--source must be oracle or formula");
        require_word_cap(n, caps);
        return oracle_table(ys, c, n);
    }
    return series_table(parse_special_series(label), n);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pattern avoidance on modified ascent sequences", "modasc"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--n", g.n, "Length, order or table size");
    app.add_option("--cap", g.cap, "Enumeration cap (overrides FP_CAP and the defaults 10/12)")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format (depends on the subcommand)");
    app.add_option("--jobs", g.jobs, "Worker threads for independent checks")->check(CLI::Range(1u, 256u));
    app.add_flag("--seedless", g.seedless, "Assert that no random number generator is used");
    app.add_flag("--timing", g.timing, "Append elapsed time to reports");

    std::string cls = "modasc", avoid, source = "oracle", which, suite, table, path, check;
    std::size_t order = 20;
    bool list = false;

    auto* gen = app.add_subcommand("generate", "List a class, optionally restricted to avoiders");
    gen->add_option("--class", cls, "modasc or prim");
    gen->add_option("--avoid", avoid, "Comma-separated patterns");

    auto* cnt = app.add_subcommand("count", "Count avoiders for n = 1..N");
    cnt->add_option("--class", cls, "modasc or prim");
    cnt->add_option("--avoid", avoid, "Comma-separated patterns");
    cnt->add_option("--source", source, "oracle, formula or both");

    auto* tab = app.add_subcommand("table", "Recompute an enumeration table");
    tab->add_option("--which", which, "table1 or table2")->required();

    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    ver->add_option("--suite", suite, "bijections, transport, equivalences, identities or all")->required();

    auto* exp = app.add_subcommand("export", "Write a count table");
    exp->add_option("--table", table, "<patterns>-<class> (e.g. 312-modasc) or a series name")->required();
    exp->add_option("--out", path, "Output file (default: stdout)");
    exp->add_option("--source", source, "oracle or formula");

    auto* ex = app.add_subcommand("experiment", "Data comparisons for open questions");
    ex->add_option("--check", check, "Experiment name");
    ex->add_option("--order", order, "Series order");
    ex->add_flag("--list", list, "List experiment names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const auto start = std::chrono::steady_clock::now();
    const std::string command = echo(argc, argv);
    try {
        const Caps caps = resolve_caps(g);

        if (*gen) {
            const std::size_t n = need_n(g);
            require_word_cap(n, caps);
            if (!g.format.empty() && g.format != "compact" && g.format != "spaced") {
                throw InvalidInput("generate format must be compact or spaced");
            }
            const auto ys = patterns_or_none(avoid);
            for (const Word& w : avoiders(n, ys, parse_sequence_class(cls), caps.words)) {
                out << (g.format == "spaced" ? format_word(w) : format_compact(w)) << '\n';
            }
            return 0;
        }

        if (*cnt) {
            const std::size_t n = need_n(g);
            const SequenceClass c = parse_sequence_class(cls);
            const auto ys = patterns_or_none(avoid);
            if (source == "oracle") {
                require_word_cap(n, caps);
                CountTable t = oracle_table(ys, c, n);
                out << format_table(t, g.format.empty() ? ExportFormat::bfile : parse_export_format(g.format));
                return 0;
            }
            if (ys.size() != 1) throw InvalidInput("formula counts take exactly one pattern");
            if (source == "formula") {
                CountTable t = formula_table(ys.front(), c, n);
                out << format_table(t, g.format.empty() ? ExportFormat::bfile : parse_export_format(g.format));
                return 0;
            }
            if (source != "both") throw InvalidInput("--source must be oracle, formula or both");
            require_word_cap(n, caps);
            int code = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                const Integer a = oracle_count(ys, c, k);
                const Integer b = closed_count(ys.front(), c, k);
                out << k << ' ' << a << ' ' << b << (a == b ? "" : "  MISMATCH") << '\n';
                if (a != b) code = 1;
            }
            return code;
        }

        if (*tab) {
            const RunOptions o{need_n(g), caps, g.jobs};
            RunReport report = make_report(command, g, caps, table_checks(parse_table_id(which), o));
            return emit_report(report, g, start, out);
        }

        if (*ver) {
            const RunOptions o{need_n(g), caps, g.jobs};
            RunReport report = make_report(command, g, caps, suite_checks(parse_suite_id(suite), o));
            return emit_report(report, g, start, out);
        }

        if (*exp) {
            const std::size_t n = need_n(g);
            const CountTable t = build_table(table, n, source, caps);
            const ExportFormat f = g.format.empty() ? ExportFormat::bfile : parse_export_format(g.format);
            if (path.empty()) out << format_table(t, f);
            else export_table(t, f, std::filesystem::path(path));
            return 0;
        }

        if (*ex) {
            if (list || check.empty()) {
                for (const auto& name : experiment_names()) out << name << '\n';
                return 0;
            }
            const RunOptions o{g.n.value_or(order), caps, g.jobs};
            RunReport report = make_report(command, g, caps, experiment_checks(check, order, o));
            return emit_report(report, g, start, out);
        }
    } catch (const CapExceeded& e) {
        err << "error: cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace modasc
