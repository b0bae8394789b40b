#include "wsr/wsr.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using wsr::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_invalid_input = 2;
constexpr int exit_check_failed = 3;

// Anything wrong with the bytes the user handed us (unreadable file, bad
// JSON, malformed document) is an input error, not an internal one.
struct input_error : wsr::error {
    using wsr::error::error;
};

bool g_verbose = false;

void note(const std::string& line) {
    if (g_verbose)
        std::cerr << line << '\n';
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

std::vector<wsr::CharVector> read_raw(const std::string& path) {
    try {
        return wsr::parse_pair_document(load_json(path));
    } catch (const input_error&) {
        throw;
    } catch (const wsr::error& e) {
        throw input_error(path + ": " + e.what());
    }
}

void emit(const json& report) {
    std::cout << report.dump(2) << '\n';
}

// Shared skeleton for the single-pair subcommands: parse, validate, and on
// success let `body` fill in the payload and pick the exit code.
int with_pair(const std::string& path,
              const std::function<int(const wsr::CharacteristicPair&, json&)>& body) {
    std::vector<wsr::CharVector> raw = read_raw(path);
    json report = wsr::report_header(raw);
    auto val = wsr::CharacteristicPair::validate(raw);
    report["validation"] = wsr::validation_json(val);
    if (!val.ok()) {
        emit(report);
        note("invalid input: " + std::to_string(val.violations.size()) + " violation(s)");
        return exit_invalid_input;
    }
    int code = body(*val.pair, report);
    emit(report);
    return code;
}

int cmd_validate(const std::string& path) {
    return with_pair(path, [](const wsr::CharacteristicPair& pair, json&) {
        note("valid pair with m = " + std::to_string(pair.size()));
        return exit_ok;
    });
}

int analyze_one(const std::string& path, json& report) {
    std::vector<wsr::CharVector> raw = read_raw(path);
    report = wsr::analysis_report(raw);
    return report["validation"]["ok"].get<bool>() ? exit_ok : exit_invalid_input;
}

int cmd_analyze(const std::string& path, const std::string& out_dir) {
    if (!fs::is_directory(path)) {
        json report;
        int code = analyze_one(path, report);
        emit(report);
        if (code == exit_ok)
            note("analyzed " + path + ", index " +
                 report["picard"]["index"].get<std::string>());
        return code;
    }

    // Batch mode: every *.json under the directory, one report each, plus a
    // summary.  A failing input is recorded and does not stop the others.
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(path))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    if (!out_dir.empty())
        fs::create_directories(out_dir);
    json reports = json::array();
    std::size_t ok = 0, invalid = 0, failed = 0;
    for (const fs::path& p : inputs) {
        json entry;
        entry["file"] = p.filename().string();
        try {
            json report;
            int code = analyze_one(p.string(), report);
            (code == exit_ok ? ok : invalid)++;
            entry["status"] = code == exit_ok ? "ok" : "invalid";
            if (!out_dir.empty()) {
                fs::path out = fs::path(out_dir) / (p.stem().string() + ".report.json");
                std::ofstream o(out);
                o << report.dump(2) << '\n';
                entry["report_file"] = out.string();
            } else {
                entry["report"] = report;
            }
        } catch (const std::exception& e) {
            ++failed;
            entry["status"] = "error";
            entry["error"] = e.what();
        }
        reports.push_back(entry);
        note(entry["file"].get<std::string>() + ": " + entry["status"].get<std::string>());
    }
    json summary;
    summary["tool"] = "wsrtool";
    summary["version"] = wsr::version;
    summary["inputs"] = inputs.size();
    summary["ok"] = ok;
    summary["invalid"] = invalid;
    summary["errors"] = failed;
    summary["results"] = reports;
    emit(summary);
    return (invalid + failed) == 0 ? exit_ok : exit_invalid_input;
}

int cmd_basis(const std::string& path) {
    return with_pair(path, [](const wsr::CharacteristicPair& pair, json& report) {
        wsr::Wsr2Basis basis = wsr::wsr2_basis(pair);
        report["wsr2"] = wsr::wsr2_json(pair, basis);
        note("degree-two basis of rank " + std::to_string(2 + basis.phi_images.size()));
        return exit_ok;
    });
}

int cmd_picard(const std::string& path) {
    return with_pair(path, [](const wsr::CharacteristicPair& pair, json& report) {
        wsr::PicardReport rep = wsr::picard_report(pair);
        report["picard"] = wsr::picard_json(rep);
        note("index [Cl : Pic] = " + wsr::to_decimal(rep.index));
        return exit_ok;
    });
}

int cmd_cellular(const std::string& path) {
    return with_pair(path, [](const wsr::CharacteristicPair& pair, json& report) {
        if (wsr::in_standard_position(pair)) {
            report["normalization"] = json{{"applied", false}};
            report["cellular"] = wsr::cellular_json(wsr::cellular_basis(pair));
            return exit_ok;
        }
        try {
            wsr::SmoothNormalization norm = wsr::normalize_smooth(pair);
            json n = wsr::normalization_json(norm);
            n["applied"] = true;
            report["normalization"] = n;
            report["cellular"] = wsr::cellular_json(wsr::cellular_basis(norm.pair));
            note("normalized with rotation " + std::to_string(norm.rotation));
            return exit_ok;
        } catch (const wsr::no_smooth_vertex& e) {
            report["error"] = json{{"kind", "NoSmoothVertex"}, {"message", e.what()}};
            note("no smooth vertex; cellular basis undefined");
            return exit_check_failed;
        }
    });
}

int cmd_check(const std::string& pair_path, const std::string& poly_path) {
    return with_pair(pair_path, [&](const wsr::CharacteristicPair& pair, json& report) {
        wsr::SRPolynomial f = [&] {
            try {
                return wsr::parse_polynomial_document(load_json(poly_path), pair.size());
            } catch (const input_error&) {
                throw;
            } catch (const wsr::error& e) {
                throw input_error(poly_path + ": " + e.what());
            }
        }();
        report["polynomial"] = wsr::to_json(f);
        wsr::IntegralityResult r = wsr::integrality_check(pair, f);
        json c;
        c["pass"] = r.pass;
        if (r.witness) {
            c["witness"] = json{
                {"vertex", r.witness->vertex},
                {"monomial", json::array({r.witness->monomial.first,
                                          r.witness->monomial.second})},
                {"coefficient", wsr::to_string(r.witness->coefficient)}};
        } else {
            c["witness"] = json();
        }
        report["check"] = c;
        note(r.pass ? "integral at every vertex"
                    : "fails at vertex " + std::to_string(r.witness->vertex));
        return r.pass ? exit_ok : exit_check_failed;
    });
}

struct HarnessConfig {
    std::size_t m = 0; // 0 = cycle through 3..8
    long long bound = 9;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
};

int run_harness(const HarnessConfig& cfg, bool full_invariants) {
    json report;
    report["tool"] = "wsrtool";
    report["version"] = wsr::version;
    report["mode"] = full_invariants ? "fuzz" : "oracle";
    report["m"] = cfg.m;
    report["bound"] = cfg.bound;
    report["trials"] = cfg.trials;
    report["seed"] = cfg.seed;
    json failures = json::array();
    for (std::size_t k = 0; k < cfg.trials; ++k) {
        wsr::CharacteristicPair pair = wsr::fuzz_pair(k, cfg.m, cfg.bound, cfg.seed);
        std::vector<wsr::PropertyIssue> issues;
        if (full_invariants) {
            wsr::InvariantOptions opt;
            opt.seed = cfg.seed ^ k;
            issues = wsr::check_pair_invariants(pair, opt);
        } else if (wsr::wsr2_basis(pair).lattice() != wsr::intersection_oracle(pair)) {
            issues.push_back({"closed-form-vs-intersection", "lattices differ"});
        }
        if (!issues.empty()) {
            json f;
            f["trial"] = k;
            f["lambda"] = wsr::lambdas_json(pair.lambdas());
            json list = json::array();
            for (const auto& issue : issues)
                list.push_back(json{{"property", issue.property},
                                    {"detail", issue.detail}});
            f["issues"] = list;
            failures.push_back(f);
        }
        if (g_verbose && (k + 1) % 100 == 0)
            note("trial " + std::to_string(k + 1) + "/" + std::to_string(cfg.trials) +
                 ", failures so far: " + std::to_string(failures.size()));
    }
    report["failures"] = failures;
    report["pass"] = failures.empty();
    emit(report);
    note(failures.empty() ? "all trials passed"
                          : std::to_string(failures.size()) + " trial(s) failed");
    return failures.empty() ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-two weighted Stanley-Reisner computations for "
                 "characteristic pairs over Z^2"};
    app.require_subcommand(1);
    app.add_flag("--verbose", g_verbose, "human-readable summary on stderr");
    app.set_version_flag("--version", wsr::version);

    std::string pair_path, poly_path, out_dir;
    HarnessConfig cfg;

    CLI::App* validate = app.add_subcommand("validate", "check a pair document");
    validate->add_option("pair", pair_path, "pair JSON file")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "full report (file or directory)");
    analyze->add_option("pair", pair_path, "pair JSON file or directory")->required();
    analyze->add_option("--out", out_dir, "directory for batch reports");

    CLI::App* basis = app.add_subcommand("basis", "degree-two basis and lattice");
    basis->add_option("pair", pair_path, "pair JSON file")->required();

    CLI::App* check = app.add_subcommand("check", "integrality condition for a polynomial");
    check->add_option("pair", pair_path, "pair JSON file")->required();
    check->add_option("poly", poly_path, "polynomial JSON file")->required();

    CLI::App* cellular = app.add_subcommand("cellular", "algebraic cellular basis");
    cellular->add_option("pair", pair_path, "pair JSON file")->required();

    CLI::App* picard = app.add_subcommand("picard", "Cartier/Picard/class-group report");
    picard->add_option("pair", pair_path, "pair JSON file")->required();

    auto add_harness_opts = [&](CLI::App* c) {
        c->add_option("--m", cfg.m, "polygon size; 0 cycles 3..8");
        c->add_option("--bound", cfg.bound, "entry bound")->check(CLI::PositiveNumber);
        c->add_option("--trials", cfg.trials, "number of random pairs");
        c->add_option("--seed", cfg.seed, "base seed");
    };
    CLI::App* oracle = app.add_subcommand(
        "oracle", "closed-form basis vs. generic lattice intersection");
    add_harness_opts(oracle);
    CLI::App* fuzz = app.add_subcommand("fuzz", "all invariants on random pairs");
    add_harness_opts(fuzz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid_input;
    }

    try {
        if (validate->parsed())
            return cmd_validate(pair_path);
        if (analyze->parsed())
            return cmd_analyze(pair_path, out_dir);
        if (basis->parsed())
            return cmd_basis(pair_path);
        if (check->parsed())
            return cmd_check(pair_path, poly_path);
        if (cellular->parsed())
            return cmd_cellular(pair_path);
        if (picard->parsed())
            return cmd_picard(pair_path);
        if (oracle->parsed())
            return run_harness(cfg, false);
        if (fuzz->parsed())
            return run_harness(cfg, true);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal; // unreachable: a subcommand is required
}
