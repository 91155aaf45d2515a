#include "cyclic_shape/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "cyclic_shape/check.hpp"
#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/json_io.hpp"
#include "cyclic_shape/trace_forms.hpp"

namespace cyclic_shape {

namespace {

enum class Format { json, text };

struct DiscSource {
    std::string inline_or_path;
    std::string file;
    std::string integer;

    bool given() const { return !inline_or_path.empty() || !file.empty() || !integer.empty(); }
};

struct RunConfig {
    std::string subcommand;
    Degree m = 0;
    DiscSource disc;
    DiscSource disc2;
    std::string mode = "strict";
    std::string format = "json";
    bool full = false;
    std::string theta_bound;
    std::string compare;
    std::string batch;
    std::string left;
    std::string right;
};

// Output of one request: rendered text and an exit code.
struct Outcome {
    std::string text;
    int code = 0;
};

FactoredDiscriminant load_discriminant(const DiscSource& src, const char* flag) {
    const int count = !src.inline_or_path.empty() + !src.file.empty() + !src.integer.empty();
    if (count != 1) {
        throw ParseError(std::string("exactly one discriminant source required for ") + flag + " (got " +
                         std::to_string(count) + ")");
    }
    if (!src.integer.empty()) return factor_small(parse_bigint(src.integer));
    if (!src.file.empty()) return discriminant_from_json(read_json_file(src.file));
    const auto first = src.inline_or_path.find_first_not_of(" \t\n");
    if (first != std::string::npos && src.inline_or_path[first] == '{') {
        return discriminant_from_json(parse_json(src.inline_or_path));
    }
    return discriminant_from_json(read_json_file(src.inline_or_path));
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    throw ParseError("unknown format \"" + s + "\" (expected json or text)");
}

void require_degree(Degree m) {
    if (m < 2) throw ValidationError("degree m must be at least 2 (got " + std::to_string(m) + ")");
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

Outcome run_build(Degree m, const FactoredDiscriminant& disc, Mode mode, bool full, Format fmt) {
    require_degree(m);
    const TraceZeroForm form = build_trace_zero(m, disc, mode);
    std::optional<IntMatrix> full_gram;
    if (full) full_gram = assemble_full_trace(m, form.table);
    if (fmt == Format::text) {
        std::string s = render_grid(form.gram);
        if (full_gram) s += "\n" + render_grid(*full_gram);
        return {s, 0};
    }
    Json j{{"m", m}, {"discriminant", to_json(disc)}, {"mode", to_string(mode)}, {"trace_zero", to_json(form.gram)}};
    if (full_gram) j["full"] = to_json(*full_gram);
    return {json_line(j), 0};
}

Outcome run_coeffs(Degree m, const FactoredDiscriminant& disc, Mode mode, Format fmt, std::ostream* warn) {
    require_degree(m);
    const auto profile = validate_tame_cyclic(m, disc, mode);
    const auto table = coeff_table(profile);
    std::optional<std::string> warning;
    const auto lit = table.literal_values().find(m);
    if (mode == Mode::permissive && lit != table.literal_values().end() && lit->second != table.at(m)) {
        warning = "warning: literal a_" + std::to_string(m) + " = " + to_string(lit->second) + " differs from emitted a_" +
                  std::to_string(m) + " = " + to_string(table.at(m));
    }
    if (warning && warn) *warn << *warning << '\n';
    if (fmt == Format::text) {
        std::ostringstream os;
        for (const auto& [d, e] : table.entries()) {
            os << "a_" << d << " = " << to_string(e.value) << "  (" << to_string(e.provenance) << ")\n";
        }
        if (warning) os << "literal a_" << m << " = " << to_string(lit->second) << '\n';
        for (const auto& note : table.diagnostics()) os << "note: " << note << '\n';
        return {os.str(), 0};
    }
    Json j = to_json(table);
    j["m"] = m;
    j["profile"] = to_json(profile);
    if (warning) j["warnings"] = Json::array({*warning});
    return {json_line(j), 0};
}

Outcome run_check(Degree m, const FactoredDiscriminant& disc, const std::optional<IntMatrix>& golden, Format fmt) {
    require_degree(m);
    const auto results = run_invariant_suite(m, disc, golden);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    const int code = ok ? 0 : static_cast<int>(ErrorKind::invariant);
    if (fmt == Format::text) {
        std::ostringstream os;
        for (const auto& r : results) os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        if (ok) {
            os << "pass (" << results.size() << " invariants)\n";
        } else {
            os << "fail: " << results.back().name << '\n';
        }
        return {os.str(), code};
    }
    Json inv = Json::array();
    for (const auto& r : results) {
        inv.push_back(Json{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
    }
    Json j{{"m", m}, {"result", ok ? "pass" : "fail"}, {"invariants", std::move(inv)}};
    if (!ok) j["failed"] = results.back().name;
    return {json_line(j), code};
}

std::string fail_text(const IsometryReport& r) {
    std::string s = std::string(to_string(r.verdict));
    if (r.verdict == Verdict::not_isometric) s += ": " + r.invariant + " " + r.left_value + " vs " + r.right_value;
    return s + "\n";
}

Outcome run_isometry(const IntMatrix& left, const IntMatrix& right, const std::string& theta_bound, bool compare,
                     Format fmt) {
    const IsometryReport report = isometric(left, right);
    const int code = (compare && report.verdict != Verdict::isometric) ? static_cast<int>(ErrorKind::invariant) : 0;
    std::optional<std::pair<LatticeFingerprint, LatticeFingerprint>> prints;
    if (!theta_bound.empty()) {
        const BigInt bound = parse_bigint(theta_bound);
        prints.emplace(fingerprint(left, bound), fingerprint(right, bound));
    }
    if (fmt == Format::text) {
        std::string s = fail_text(report);
        if (report.witness) s += render_grid(*report.witness);
        return {s, code};
    }
    Json j = to_json(report);
    if (prints) {
        auto fp_json = [](const LatticeFingerprint& fp) {
            Json theta = Json::object();
            for (const auto& [k, c] : fp.theta) theta[to_string(k)] = c;
            return Json{{"dimension", fp.dimension},
                        {"determinant", to_string(fp.determinant)},
                        {"minimum", to_string(fp.minimum)},
                        {"theta_bound", to_string(fp.theta_bound)},
                        {"theta", std::move(theta)}};
        };
        j["fingerprints"] = Json{{"left", fp_json(prints->first)}, {"right", fp_json(prints->second)}};
    }
    return {json_line(j), code};
}

Outcome run_shape(const IntMatrix& left, const IntMatrix& right, Format fmt) {
    const bool equal = shape_equal(left, right);
    if (fmt == Format::text) return {equal ? "equal shape\n" : "different shape\n", 0};
    return {json_line(Json{{"shape_equal", equal}}), 0};
}

// Left and right Gram matrices for isometry / shape: files, or A(d) built
// from --m with --disc and --disc2 / --compare.
std::pair<IntMatrix, IntMatrix> comparison_operands(const RunConfig& cfg, Mode mode) {
    auto built = [&](const DiscSource& src, const char* flag) {
        require_degree(cfg.m);
        return build_trace_zero(cfg.m, load_discriminant(src, flag), mode).gram;
    };
    IntMatrix left = !cfg.left.empty() ? matrix_from_json(read_json_file(cfg.left)) : built(cfg.disc, "--disc");
    IntMatrix right;
    if (!cfg.right.empty()) {
        right = matrix_from_json(read_json_file(cfg.right));
    } else if (!cfg.compare.empty()) {
        right = matrix_from_json(read_json_file(cfg.compare));
    } else if (cfg.disc2.given()) {
        right = built(cfg.disc2, "--disc2");
    } else {
        throw ParseError("no right-hand operand: give --right, --compare or a --disc2 source");
    }
    return {std::move(left), std::move(right)};
}

Outcome error_outcome(const Error& e) { return {json_line(error_json(e)), e.exit_code()}; }

// One JSON object per line: {"m": 9, "disc": {...}} with "disc" replaceable by
// "disc_int"; optional "mode". Output lines follow input order.
int run_batch(const RunConfig& cfg, std::ostream& out) {
    std::ifstream in(cfg.batch);
    if (!in) throw ParseError("cannot read batch file " + cfg.batch);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }

    auto process = [&](const std::string& line) -> Outcome {
        try {
            const Json req = parse_json(line);
            if (!req.is_object() || !req.contains("m")) throw ParseError("batch line needs an object with \"m\"");
            const BigInt m_big = bigint_from_json(req.at("m"));
            if (m_big < 0 || !m_big.fits_ulong_p()) throw ValidationError("degree out of range");
            const Degree m = m_big.get_ui();
            FactoredDiscriminant disc = [&] {
                if (req.contains("disc") && req.contains("disc_int")) throw ParseError("exactly one of disc, disc_int");
                if (req.contains("disc")) return discriminant_from_json(req.at("disc"));
                if (req.contains("disc_int")) return factor_small(bigint_from_json(req.at("disc_int")));
                throw ParseError("batch line needs \"disc\" or \"disc_int\"");
            }();
            const Mode mode = parse_mode(req.value("mode", cfg.mode));
            if (cfg.subcommand == "build") return run_build(m, disc, mode, cfg.full, Format::json);
            if (cfg.subcommand == "coeffs") return run_coeffs(m, disc, mode, Format::json, nullptr);
            return run_check(m, disc, std::nullopt, Format::json);
        } catch (const Error& e) {
            return error_outcome(e);
        }
    };

    std::vector<Outcome> results(lines.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), std::max<std::size_t>(lines.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) results[i] = process(lines[i]);
        });
    }
    for (auto& t : pool) t.join();

    int code = 0;
    for (const auto& r : results) {
        out << r.text;
        if (code == 0) code = r.code;
    }
    return code;
}

Outcome dispatch(const RunConfig& cfg, std::ostream& err) {
    const Mode mode = parse_mode(cfg.mode);
    const Format fmt = parse_format(cfg.format);
    if (cfg.subcommand == "build") return run_build(cfg.m, load_discriminant(cfg.disc, "--disc"), mode, cfg.full, fmt);
    if (cfg.subcommand == "coeffs") return run_coeffs(cfg.m, load_discriminant(cfg.disc, "--disc"), mode, fmt, &err);
    if (cfg.subcommand == "check") {
        if (mode != Mode::strict) throw ValidationError("check runs on strict inputs only");
        std::optional<IntMatrix> golden;
        if (!cfg.compare.empty()) golden = matrix_from_json(read_json_file(cfg.compare));
        return run_check(cfg.m, load_discriminant(cfg.disc, "--disc"), golden, fmt);
    }
    const auto [left, right] = comparison_operands(cfg, mode);
    if (cfg.subcommand == "isometry") return run_isometry(left, right, cfg.theta_bound, !cfg.compare.empty(), fmt);
    return run_shape(left, right, fmt);
}

void add_disc_options(CLI::App* sub, RunConfig& cfg, bool second) {
    sub->add_option("--m", cfg.m, "Degree of the cyclic field");
    sub->add_option("--disc", cfg.disc.inline_or_path, "Discriminant as inline JSON or a JSON file path");
    sub->add_option("--disc-file", cfg.disc.file, "Discriminant JSON file");
    sub->add_option("--disc-int", cfg.disc.integer, "Discriminant as a decimal integer (trial-factored)");
    sub->add_option("--mode", cfg.mode, "strict or permissive")->capture_default_str();
    sub->add_option("--format", cfg.format, "json or text")->capture_default_str();
    if (second) {
        sub->add_option("--disc2", cfg.disc2.inline_or_path, "Second discriminant, inline JSON or path");
        sub->add_option("--disc2-file", cfg.disc2.file, "Second discriminant JSON file");
        sub->add_option("--disc2-int", cfg.disc2.integer, "Second discriminant as a decimal integer");
        sub->add_option("--left", cfg.left, "Left Gram matrix JSON file");
        sub->add_option("--right", cfg.right, "Right Gram matrix JSON file");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Trace-zero Gram matrices of tame cyclic number fields", "cyclic-shape"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Build the trace-zero Gram matrix A(d)");
    add_disc_options(build, cfg, false);
    build->add_flag("--full", cfg.full, "Also emit the full trace Gram matrix");
    build->add_option("--batch", cfg.batch, "JSON-lines input file");

    auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient table a_d");
    add_disc_options(coeffs, cfg, false);
    coeffs->add_option("--batch", cfg.batch, "JSON-lines input file");

    auto* check = app.add_subcommand("check", "Run the invariant suite");
    add_disc_options(check, cfg, false);
    check->add_option("--compare", cfg.compare, "Golden Gram matrix JSON file");
    check->add_option("--batch", cfg.batch, "JSON-lines input file");

    auto* iso = app.add_subcommand("isometry", "Test two Gram matrices for isometry");
    add_disc_options(iso, cfg, true);
    iso->add_option("--compare", cfg.compare, "External Gram matrix compared against A(d); exit 1 unless isometric");
    iso->add_option("--theta-bound", cfg.theta_bound, "Also report theta fingerprints up to this norm");

    auto* shape = app.add_subcommand("shape", "Compare shapes (isometry up to scaling)");
    add_disc_options(shape, cfg, true);
    shape->add_option("--compare", cfg.compare, "External Gram matrix compared against A(d)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json_line(error_json(ParseError(e.what())));
        return static_cast<int>(ErrorKind::parse);
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (!cfg.batch.empty()) return run_batch(cfg, out);
        const Outcome o = dispatch(cfg, err);
        out << o.text;
        return o.code;
    } catch (const Error& e) {
        err << json_line(error_json(e));
        return e.exit_code();
    }
}

}  // namespace cyclic_shape
