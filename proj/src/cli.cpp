#include "modgal/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "modgal/galrep.hpp"
#include "modgal/polyverify.hpp"
#include "modgal/qseries.hpp"
#include "modgal/serialize.hpp"
#include "modgal/twist.hpp"

#ifndef MODGAL_DATA_DIR
#define MODGAL_DATA_DIR "data"
#endif

namespace modgal::cli {

namespace {

std::string format_pattern(const DegreePattern& pattern) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < pattern.size(); ++i) s << (i ? "," : "") << pattern[i];
    s << '}';
    return s.str();
}

std::string format_patterns(const std::vector<DegreePattern>& patterns) {
    std::string s;
    for (std::size_t i = 0; i < patterns.size(); ++i) s += (i ? " or " : "") + format_pattern(patterns[i]);
    return s;
}

// Maps library exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const NotFound& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kNotFound;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
}

// ---------------------------------------------------------------- renderers

void render_twist_text(std::uint64_t k, std::uint64_t ell, const TwistResult& r, std::ostream& out) {
    const auto& c = r.certificate;
    out << "Delta_" << k << " = theta^" << r.i << " Delta_" << r.k_prime << " mod " << ell << '\n';
    out << "  i = " << r.i << ", k' = " << r.k_prime << '\n';
    out << "  weight congruence: " << k << " = " << r.k_prime << " + 2*" << r.i << " mod " << ell - 1 << '\n';
    out << "  prime checks (p <= " << c.bound << ", p != " << ell << "):";
    for (const auto& pc : c.checks) out << ' ' << pc.p << ':' << pc.lhs << '=' << pc.rhs;
    out << '\n';
    out << "  a_n(Delta_" << k << ") = n^" << r.i << " a_n(Delta_" << r.k_prime << ") for all n <= "
        << c.extended_terms << '\n';
}

Json twist_json(std::uint64_t k, std::uint64_t ell, const TwistResult& r, const std::optional<std::string>& warning) {
    Json j;
    j["k"] = k;
    j["ell"] = ell;
    j["i"] = r.i;
    j["k_prime"] = r.k_prime;
    j["certificate"] = to_json(r.certificate);
    j["warnings"] = warning ? Json::array({*warning}) : Json::array();
    return j;
}

void render_screen_text(const ScreeningReport& r, std::ostream& out) {
    out << "screen Delta_" << r.k << " mod " << r.ell << " (heuristic, primes p <= " << r.bound << ")\n";
    out << "  reducible candidate:   " << (r.reducible_candidate ? "yes" : "no");
    if (r.reducible_j) out << " (a_p = p^" << *r.reducible_j << " + p^(k-1-" << *r.reducible_j << "))";
    out << '\n';
    out << "  dihedral candidate:    " << (r.dihedral_candidate ? "yes" : "no") << '\n';
    out << "  small image candidate: " << (r.small_image_candidate ? "yes" : "no") << '\n';
    out << "  verdict: " << r.verdict() << '\n';
}

void render_verify_text(const VerificationReport& r, bool full, std::ostream& out) {
    out << "verify Delta_" << r.k << " mod " << r.ell << ": ";
    if (r.consistent()) {
        out << "consistent to pmax = " << r.pmax << '\n';
    } else {
        out << r.counts.fail << " FAIL up to pmax = " << r.pmax << '\n';
    }
    out << "  match " << r.counts.match << ", ambiguous-pass " << r.counts.ambiguous_pass << ", skipped-ramified "
        << r.counts.skipped_ramified << ", skipped-ell " << r.counts.skipped_ell << ", FAIL " << r.counts.fail << '\n';
    std::vector<std::uint64_t> ramified;
    for (const auto& o : r.outcomes) {
        if (o.status == OutcomeStatus::SkippedRamified) ramified.push_back(o.p);
    }
    if (!ramified.empty()) {
        out << "  skipped (ramified):";
        for (auto p : ramified) out << ' ' << p;
        out << '\n';
    }
    if (!r.failures.empty()) {
        out << "  failures:";
        for (auto p : r.failures) out << ' ' << p;
        out << '\n';
    }
    if (full) {
        for (const auto& o : r.outcomes) {
            out << "  p=" << o.p << ' ' << to_string(o.status);
            if (!o.predicted.empty()) {
                out << " observed " << format_pattern(o.observed) << " predicted " << format_patterns(o.predicted);
            }
            out << '\n';
        }
    }
}

void emit_json(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void require_weight_and_ell(const RunConfig& cfg) {
    if (cfg.weight == 0 || cfg.ell == 0) throw std::invalid_argument("--weight and --ell are required");
}

} // namespace

std::filesystem::path bundled_poly_path(const std::filesystem::path& data_dir, std::uint64_t k, std::uint64_t ell) {
    return data_dir / ("pk" + std::to_string(k) + "_l" + std::to_string(ell) + ".txt");
}

int cmd_qexp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_weight_and_ell(cfg);
        const QExpansion f = delta_k(cfg.weight, cfg.ell, std::max<std::uint64_t>(cfg.terms, 1)).truncated(cfg.terms);
        if (cfg.format == Format::Json) {
            emit_json(to_json(f), out);
        } else {
            for (std::size_t n = 1; n <= f.precision(); ++n) out << (n > 1 ? " " : "") << f[n];
            out << '\n';
        }
        return exit_code::kOk;
    });
}

int cmd_twist_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_weight_and_ell(cfg);
        const TwistResult r = twist_search(cfg.weight, cfg.ell, cfg.extended);
        const auto warning = published_discrepancy(cfg.weight, cfg.ell, r);
        if (cfg.format == Format::Json) {
            emit_json(twist_json(cfg.weight, cfg.ell, r, warning), out);
        } else {
            render_twist_text(cfg.weight, cfg.ell, r, out);
            if (warning) out << "warning: " << *warning << '\n';
        }
        return exit_code::kOk;
    });
}

int cmd_verify_poly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_weight_and_ell(cfg);
        const std::filesystem::path path =
            cfg.poly_file.empty() ? bundled_poly_path(cfg.data_dir, cfg.weight, cfg.ell) : std::filesystem::path(cfg.poly_file);
        ProjPolyRecord rec = load_poly_file(path);
        rec.k = cfg.weight;
        rec.ell = cfg.ell;
        for (const auto& w : rec.warnings) err << "warning: " << path.string() << ": " << w << '\n';
        const VerificationReport r = verify_record(rec, cfg.weight, cfg.ell, cfg.pmax);
        if (cfg.format == Format::Json) {
            emit_json(to_json(r, cfg.full), out);
        } else {
            render_verify_text(r, cfg.full, out);
        }
        return r.consistent() ? exit_code::kOk : exit_code::kVerificationFailed;
    });
}

int cmd_screen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_weight_and_ell(cfg);
        const ScreeningReport r = screen_exceptional(cfg.weight, cfg.ell, cfg.pbound);
        if (cfg.format == Format::Json) {
            emit_json(to_json(r), out);
        } else {
            render_screen_text(r, out);
        }
        return exit_code::kOk;
    });
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int status = exit_code::kOk;
    auto record_failure = [&](int code) {
        if (status == exit_code::kOk) status = code;
    };

    Json screens = Json::array();
    Json twists = Json::array();
    Json polys = Json::array();
    Json warnings = Json::array();
    Json errors = Json::array();
    std::ostringstream text;

    text << "== Exceptional-prime screening (heuristic, p <= " << cfg.pbound << ")\n";
    text << "     k  ell  reducible  dihedral  small-image  verdict\n";
    for (const auto& row : published_twists()) {
        const ScreeningReport r = screen_exceptional(row.k, row.ell, cfg.pbound);
        if (!r.likely_unexceptional()) record_failure(exit_code::kVerificationFailed);
        screens.push_back(to_json(r));
        text << std::setw(6) << r.k << std::setw(5) << r.ell << std::setw(11) << (r.reducible_candidate ? "yes" : "no")
             << std::setw(10) << (r.dihedral_candidate ? "yes" : "no") << std::setw(13)
             << (r.small_image_candidate ? "yes" : "no") << "  " << r.verdict() << '\n';
    }

    text << "\n== Theta twists (Delta_k = theta^i Delta_k' mod ell, checked for n <= " << cfg.extended << ")\n";
    text << "     k  ell    i   k'\n";
    for (const auto& row : published_twists()) {
        try {
            const TwistResult r = twist_search(row.k, row.ell, cfg.extended);
            const auto warning = published_discrepancy(row.k, row.ell, r);
            twists.push_back(twist_json(row.k, row.ell, r, warning));
            text << std::setw(6) << row.k << std::setw(5) << row.ell << std::setw(5) << r.i << std::setw(5)
                 << r.k_prime << '\n';
            if (warning) {
                warnings.push_back(*warning);
                text << "        warning: " << *warning << '\n';
            }
        } catch (const NotFound& e) {
            record_failure(exit_code::kNotFound);
            errors.push_back(e.what());
            text << std::setw(6) << row.k << std::setw(5) << row.ell << "  not found\n";
        }
    }

    text << "\n== Projective polynomials (factorization patterns, p <= " << cfg.pmax << ")\n";
    text << "     k  ell  match  ambiguous  ramified  fail  verdict\n";
    for (const auto& row : published_twists()) {
        const auto path = bundled_poly_path(cfg.data_dir, row.k, row.ell);
        try {
            ProjPolyRecord rec = load_poly_file(path);
            const VerificationReport r = verify_record(rec, row.k, row.ell, cfg.pmax);
            if (!r.consistent()) record_failure(exit_code::kVerificationFailed);
            polys.push_back(to_json(r, cfg.full));
            text << std::setw(6) << row.k << std::setw(5) << row.ell << std::setw(7) << r.counts.match
                 << std::setw(11) << r.counts.ambiguous_pass << std::setw(10) << r.counts.skipped_ramified
                 << std::setw(6) << r.counts.fail << "  "
                 << (r.consistent() ? "consistent to pmax = " + std::to_string(r.pmax) : std::string("INCONSISTENT"))
                 << '\n';
        } catch (const IoError& e) {
            record_failure(exit_code::kIo);
            err << "error: " << e.what() << '\n';
            errors.push_back(e.what());
            text << std::setw(6) << row.k << std::setw(5) << row.ell << "  missing data file\n";
        } catch (const ParseError& e) {
            record_failure(exit_code::kUsage);
            err << "error: " << path.string() << ": " << e.what() << '\n';
            errors.push_back(e.what());
            text << std::setw(6) << row.k << std::setw(5) << row.ell << "  unparsable data file\n";
        }
    }

    if (cfg.format == Format::Json) {
        Json doc;
        doc["screens"] = std::move(screens);
        doc["twists"] = std::move(twists);
        doc["polynomials"] = std::move(polys);
        doc["warnings"] = std::move(warnings);
        doc["errors"] = std::move(errors);
        doc["all_pass"] = status == exit_code::kOk;
        emit_json(doc, out);
    } else {
        text << '\n' << (status == exit_code::kOk ? "all checks passed" : "some checks FAILED") << '\n';
        out << text.str();
    }
    return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mod-ell q-expansions, theta twists and projective polynomial checks for level-1 eigenforms"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.data_dir = MODGAL_DATA_DIR;
    std::string format = "text";
    std::string data_dir = cfg.data_dir.string();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--data-dir", data_dir, "Directory holding the bundled polynomial files");
    };
    auto add_weight_ell = [&](CLI::App* sub) {
        sub->add_option("-k,--weight", cfg.weight, "Weight k of Delta_k")->required()->check(CLI::PositiveNumber);
        sub->add_option("-l,--ell", cfg.ell, "Prime ell")->required()->check(CLI::PositiveNumber);
    };

    auto* qexp = app.add_subcommand("qexp", "Print a_1..a_terms of Delta_k mod ell");
    add_weight_ell(qexp);
    qexp->add_option("--terms", cfg.terms, "Number of coefficients")->check(CLI::PositiveNumber);
    add_common(qexp);

    auto* twist = app.add_subcommand("twist-search", "Find (i, k') with Delta_k = theta^i Delta_k' mod ell");
    add_weight_ell(twist);
    twist->add_option("--extended", cfg.extended, "Check the full series identity up to this index")
        ->check(CLI::PositiveNumber);
    add_common(twist);

    auto* verify = app.add_subcommand("verify-poly", "Check a projective polynomial against Frobenius data");
    add_weight_ell(verify);
    verify->add_option("--poly-file", cfg.poly_file, "Polynomial file (defaults to the bundled one)");
    verify->add_option("--pmax", cfg.pmax, "Largest prime to test")->check(CLI::PositiveNumber);
    verify->add_flag("--full", cfg.full, "Include per-prime outcomes");
    add_common(verify);

    auto* screen = app.add_subcommand("screen", "Heuristic exceptional-prime screen");
    add_weight_ell(screen);
    screen->add_option("--pbound", cfg.pbound, "Largest prime to scan")->check(CLI::PositiveNumber);
    add_common(screen);

    auto* tables = app.add_subcommand("tables", "Reproduce the screening, twist and polynomial tables");
    tables->add_option("--pmax", cfg.pmax, "Largest prime for polynomial checks")->check(CLI::PositiveNumber);
    tables->add_option("--pbound", cfg.pbound, "Largest prime for screening")->check(CLI::PositiveNumber);
    tables->add_option("--extended", cfg.extended, "Series identity check length")->check(CLI::PositiveNumber);
    tables->add_flag("--full", cfg.full, "Include per-prime outcomes in JSON");
    add_common(tables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::kUsage;
    }

    cfg.format = format == "json" ? Format::Json : Format::Text;
    cfg.data_dir = data_dir;

    if (qexp->parsed()) return cmd_qexp(cfg, out, err);
    if (twist->parsed()) return cmd_twist_search(cfg, out, err);
    if (verify->parsed()) return cmd_verify_poly(cfg, out, err);
    if (screen->parsed()) return cmd_screen(cfg, out, err);
    return cmd_tables(cfg, out, err);
}

} // namespace modgal::cli
