#include "qbs/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "qbs/accounting.h"
#include "qbs/amplifier.h"
#include "qbs/oracle_file.h"
#include "qbs/report.h"
#include "qbs/search.h"

namespace qbs {

namespace {

struct RunConfig {
    std::string oracle_path;
    std::string backend = "auto";
    double a = kDefaultLogisticParameter;
    std::optional<int> k_max;
    std::optional<int64_t> t_uf;
    std::string format;
    std::string out_path;
    std::string trajectory_prefix;
    int n_lo = 1;
    int n_hi = 20;
    std::optional<int64_t> n;
    int samples = 0;
    uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

int search_bit_cap() {
    // The dense state needs n + m + 1 qubits; the table itself is capped separately.
    return std::min(kDefaultMaxSearchBits, max_qubits() - 1);
}

OracleSpec load_spec(const RunConfig& cfg) {
    auto file = load_oracle_file(cfg.oracle_path, search_bit_cap());
    std::string backend = cfg.backend;
    if (backend == "auto") {
        backend = file.expr ? "compiled" : "table";
    }
    if (backend == "table") {
        return OracleSpec(file.n, file.table);
    }
    if (!file.expr) {
        throw UsageError("backend '" + backend + "' needs an oracle of kind \"expr\"");
    }
    if (backend == "expr") {
        return OracleSpec(file.n, *file.expr);
    }
    return OracleSpec(file.n, compile_reversible(*file.expr, file.n));
}

AmplifierConfig amplifier_config(const RunConfig& cfg, int n) {
    auto config = AmplifierConfig::for_width(n, cfg.a);
    if (cfg.k_max) {
        config.k_max = *cfg.k_max;
    }
    config.validate();
    return config;
}

// Table and AST backends apply U_f as one opaque gate.
int64_t oracle_cost(const RunConfig& cfg, const OracleSpec& spec) {
    if (cfg.t_uf) {
        return *cfg.t_uf;
    }
    return spec.t_uf().value_or(1);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write " + cfg.out_path);
    }
    file << text;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    auto spec = load_spec(cfg);
    auto report = run_search(spec, amplifier_config(cfg, spec.n()));
    auto complexity = reconcile(report, CostModel{spec.n(), oracle_cost(cfg, spec)});

    if (!cfg.trajectory_prefix.empty()) {
        for (const auto& s : report.stages) {
            std::ofstream file(cfg.trajectory_prefix + std::to_string(s.i) + ".csv", std::ios::binary);
            if (!file) {
                throw UsageError("cannot write trajectory under " + cfg.trajectory_prefix);
            }
            write_trajectory_csv(file, s.trace);
        }
    }

    std::ostringstream text;
    if (cfg.format == "text") {
        write_text(text, report);
    } else {
        text << to_json(report, complexity).dump(2) << '\n';
    }
    emit(cfg, out, text.str());

    if (!report.consistent) {
        return kExitInconsistent;
    }
    return report.solution ? kExitFound : kExitNotFound;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    auto spec = load_spec(cfg);
    auto result = classical_scan(spec);
    std::ostringstream text;
    if (cfg.format == "text") {
        text << (result.found ? "Found x = " + std::to_string(result.found->to_integer()) : std::string("Reject"))
             << " after " << result.calls << " calls\n";
    } else {
        text << to_json(result).dump(2) << '\n';
    }
    emit(cfg, out, text.str());
    return result.found ? kExitFound : kExitNotFound;
}

int cmd_theorems(const RunConfig& cfg, std::ostream& out) {
    auto report = theorem_report(cfg.n_lo, cfg.n_hi, cfg.a);
    std::ostringstream text;
    if (cfg.format == "json") {
        Json j;
        j["a"] = report.a;
        Json rows = Json::array();
        for (const auto& r : report.rows) {
            Json row;
            row["n"] = r.n;
            row["x0"] = r.x0;
            row["k_min"] = r.k_min ? Json(*r.k_min) : Json(nullptr);
            row["bound_2n"] = r.bound_2n;
            row["bound_eq7"] = r.bound_eq7;
            row["bound_54"] = r.bound_54;
            row["thm1_holds"] = r.thm1_holds;
            row["eq7_as_upper_holds"] = r.eq7_as_upper_holds;
            row["eq7_as_stated_holds"] = r.eq7_as_stated_holds;
            row["underflow"] = r.underflow;
            rows.push_back(row);
        }
        j["rows"] = rows;
        text << j.dump(2) << '\n';
    } else {
        write_theorem_csv(text, report);
    }
    emit(cfg, out, text.str());
    return 0;
}

int cmd_complexity(const RunConfig& cfg, std::ostream& out) {
    Json j;
    if (!cfg.oracle_path.empty()) {
        auto spec = load_spec(cfg);
        if (!cfg.t_uf && !spec.t_uf()) {
            throw UsageError("complexity needs --tuf unless the oracle is compiled from an expression");
        }
        auto report = run_search(spec, amplifier_config(cfg, spec.n()));
        j = to_json(reconcile(report, CostModel{spec.n(), oracle_cost(cfg, spec)}));
    } else {
        if (!cfg.n || !cfg.t_uf) {
            throw UsageError("complexity needs --n and --tuf, or --oracle");
        }
        CostModel model{*cfg.n, *cfg.t_uf};
        j["n"] = model.n;
        j["t_uf"] = model.t_uf;
        j["formula"] = to_json(total_cost(model));
    }
    emit(cfg, out, j.dump(2) + "\n");
    return 0;
}

int cmd_differential(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.n || *cfg.n < 1) {
        throw UsageError("differential needs --n >= 1");
    }
    int n = static_cast<int>(*cfg.n);
    bool exhaustive = cfg.samples == 0;
    if (exhaustive && n > 4) {
        throw UsageError("exhaustive differential runs are limited to n <= 4; pass --samples");
    }
    if (n > search_bit_cap()) {
        throw UsageError("n = " + std::to_string(n) + " exceeds the search cap");
    }
    uint64_t size = uint64_t{1} << n;
    uint64_t total = exhaustive ? (uint64_t{1} << size) : static_cast<uint64_t>(cfg.samples);
    std::mt19937_64 rng(cfg.seed);

    uint64_t agree = 0;
    uint64_t found_both = 0;
    std::vector<uint64_t> disagreements;
    TruthTable table;
    table.values.resize(size);
    for (uint64_t index = 0; index < total; index++) {
        if (exhaustive) {
            for (uint64_t x = 0; x < size; x++) {
                table.values[x] = (index >> x) & 1;
            }
        } else {
            for (uint64_t x = 0; x < size; x++) {
                table.values[x] = rng() & 1;
            }
        }
        OracleSpec spec(n, table);
        auto quantum = run_search(spec, amplifier_config(cfg, n));
        auto classical = classical_scan(spec);
        bool same_verdict = quantum.solution.has_value() == classical.found.has_value();
        bool valid = !quantum.solution || spec.eval(*quantum.solution) == 1;
        if (same_verdict && valid && quantum.consistent) {
            agree++;
            found_both += quantum.solution ? 1 : 0;
        } else {
            disagreements.push_back(index);
        }
    }

    std::ostringstream text;
    if (cfg.format == "json") {
        Json j;
        j["n"] = n;
        j["mode"] = exhaustive ? "exhaustive" : "random";
        if (!exhaustive) {
            j["seed"] = cfg.seed;
        }
        j["functions"] = total;
        j["agree"] = agree;
        j["agree_found"] = found_both;
        j["agree_reject"] = agree - found_both;
        j["disagree"] = disagreements;
        text << j.dump(2) << '\n';
    } else {
        text << "n=" << n << " mode=" << (exhaustive ? "exhaustive" : "random") << " functions=" << total << "\n";
        text << "agree, both found:    " << found_both << "\n";
        text << "agree, both rejected: " << (agree - found_both) << "\n";
        text << "disagree:             " << disagreements.size() << "\n";
        text << agree << "/" << total << " agree\n";
        for (auto index : disagreements) {
            text << "disagreement at function " << index << "\n";
        }
    }
    emit(cfg, out, text.str());
    return disagreements.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Bit-by-bit quantum search simulator", "qbs"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub, const std::string& fallback) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->callback([&cfg, fallback] {
            if (cfg.format.empty()) {
                cfg.format = fallback;
            }
        });
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a, "Logistic map parameter")->check(CLI::Range(0.0, 4.0));
        sub->add_option("--kmax", cfg.k_max, "Amplifier iteration budget (default 2n)")->check(CLI::NonNegativeNumber);
        sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    };
    auto add_oracle = [&](CLI::App* sub, bool required) {
        auto opt = sub->add_option("--oracle", cfg.oracle_path, "Oracle JSON file");
        if (required) {
            opt->required();
        }
        sub->add_option("--backend", cfg.backend, "Oracle backend")
            ->check(CLI::IsMember({"auto", "table", "expr", "compiled"}));
    };

    auto* search = app.add_subcommand("search", "Run the quantum bit-by-bit search");
    add_oracle(search, true);
    add_common(search);
    search->add_option("--tuf", cfg.t_uf, "Oracle gate cost for the complexity block")->check(CLI::NonNegativeNumber);
    search->add_option("--trajectory-prefix", cfg.trajectory_prefix, "Write stage trajectories to PREFIX<i>.csv");
    add_format(search, "json");

    auto* scan = app.add_subcommand("scan", "Run the classical linear scan");
    add_oracle(scan, true);
    scan->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    add_format(scan, "json");

    auto* theorems = app.add_subcommand("theorems", "Sweep first-crossing indices for x0 = 2^-n");
    theorems->add_option("--nmin", cfg.n_lo, "Smallest n")->check(CLI::Range(1, 1074));
    theorems->add_option("--nmax", cfg.n_hi, "Largest n")->check(CLI::Range(1, 100000));
    theorems->add_option("--a", cfg.a, "Logistic map parameter")->check(CLI::Range(0.0, 4.0));
    theorems->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    add_format(theorems, "csv");

    auto* complexity = app.add_subcommand("complexity", "Evaluate and reconcile the gate-count formula");
    add_oracle(complexity, false);
    add_common(complexity);
    complexity->add_option("--n", cfg.n, "Search width")->check(CLI::PositiveNumber);
    complexity->add_option("--tuf", cfg.t_uf, "Oracle gate cost")->check(CLI::NonNegativeNumber);
    add_format(complexity, "json");

    auto* differential = app.add_subcommand("differential", "Compare quantum search with the classical scan");
    add_common(differential);
    differential->add_option("--n", cfg.n, "Search width")->required()->check(CLI::PositiveNumber);
    differential->add_option("--samples", cfg.samples, "Random functions to test (0 = exhaustive)")
        ->check(CLI::NonNegativeNumber);
    differential->add_option("--seed", cfg.seed, "Random seed");
    add_format(differential, "text");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*search) {
            return cmd_search(cfg, out);
        }
        if (*scan) {
            return cmd_scan(cfg, out);
        }
        if (*theorems) {
            if (cfg.n_hi < cfg.n_lo) {
                throw UsageError("--nmax must not be below --nmin");
            }
            return cmd_theorems(cfg, out);
        }
        if (*complexity) {
            return cmd_complexity(cfg, out);
        }
        return cmd_differential(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qbs
