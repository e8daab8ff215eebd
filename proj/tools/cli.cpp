// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/transpile.hpp"

namespace qwalk::cli {

namespace {

/// Bad flag values detected after CLI11 has accepted the argv shape.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

std::string fixed10(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10f", x);
    return buf;
}

double parse_double(std::string_view text, std::string_view flag) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError(std::string(flag) + ": '" + std::string(text) + "' is not a number");
    }
    return v;
}

size_t parse_size(std::string_view text, std::string_view flag) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError(std::string(flag) + ": '" + std::string(text) + "' is not a non-negative integer");
    }
    return v;
}

/// "A..B" -> {A, B}
std::pair<std::string_view, std::string_view> split_range(std::string_view text, std::string_view flag) {
    size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        throw UsageError(std::string(flag) + ": expected LO..HI, got '" + std::string(text) + "'");
    }
    return {text.substr(0, dots), text.substr(dots + 2)};
}

nlohmann::json amplitudes_json(const StateVector &s) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < s.size(); i++) {
        arr.push_back({
            {"basis_label", basis_label(i, s.num_qubits())},
            {"re", s[i].real()},
            {"im", s[i].imag()},
            {"prob", std::norm(s[i])},
        });
    }
    return arr;
}

/// One `label: prob` line per basis state whose probability shows as nonzero.
void print_outcomes(std::ostream &out, const StateVector &s) {
    for (size_t i = 0; i < s.size(); i++) {
        double p = std::norm(s[i]);
        if (p >= 5e-11) {
            out << basis_label(i, s.num_qubits()) << ": " << fixed10(p) << "\n";
        }
    }
}

Sampling parse_sampling(const std::string &name) {
    auto s = sampling_from_name(name);
    if (!s) {
        throw UsageError("--sampling: expected fresh or fixed, got '" + name + "'");
    }
    return *s;
}

struct DecomposeArgs {
    std::string in, out, level;
    bool no_verify = false;
};

struct SimulateArgs {
    std::string in, state, amplitudes;
};

struct WalkArgs {
    size_t qubits = 4, start = 0, steps = 1;
    unsigned coin = 0;
    std::string emit_circuit, amplitudes;
};

struct FidelityArgs {
    size_t qubits = 4, steps = 1, trials = 200, threads = 1;
    double eps = 0, eps_low = 0;
    uint64_t seed = 0;
    std::string json, sampling = "fresh";
};

struct SweepArgs {
    size_t qubits = 4, trials = 200, threads = 1;
    std::string eps_grid, eps_range, steps, csv, sampling = "fresh";
    double eps_low = 0;
    uint64_t seed = 0;
};

struct CountArgs {
    size_t walker = 0;
    std::string in;
};

int do_decompose(const DecomposeArgs &a, std::ostream &out) {
    auto level = lowering_level_from_name(a.level);
    if (!level) {
        throw UsageError("--level: expected negctrl, toffoli or cnot, got '" + a.level + "'");
    }
    Circuit c = parse_qwc(read_file(a.in));
    Circuit lowered = lower(c, *level, {.verify = !a.no_verify});
    write_file(a.out, emit_qwc(lowered));
    GateCounts counts = count_gates(lowered);
    out << "wrote " << lowered.instructions().size() << " instructions to " << a.out << "\n";
    out << "cnot=" << counts.cnot << " single_qubit=" << counts.single_qubit << "\n";
    return kExitOk;
}

int do_simulate(const SimulateArgs &a, std::ostream &out) {
    Circuit c = parse_qwc(read_file(a.in));
    if (a.state.size() != c.width()) {
        throw UsageError("--state: expected " + std::to_string(c.width()) + " bits, got '" + a.state + "'");
    }
    StateVector input = StateVector::from_bits(a.state);
    StateVector result = simulate(c, input);
    print_outcomes(out, result);
    if (!a.amplitudes.empty()) {
        write_file(a.amplitudes, amplitudes_json(result).dump(2) + "\n");
    }
    return kExitOk;
}

int do_walk(const WalkArgs &a, std::ostream &out) {
    WalkerSpec spec{a.qubits, a.start, a.steps, a.coin};
    spec.validate();
    if (!a.emit_circuit.empty()) {
        write_file(a.emit_circuit, emit_qwc(build_walker_circuit(a.qubits, a.steps)));
    }
    WalkerState result = evolve_ideal(spec);
    print_outcomes(out, result.state);
    if (!a.amplitudes.empty()) {
        write_file(a.amplitudes, amplitudes_json(result.state).dump(2) + "\n");
    }
    return kExitOk;
}

int do_fidelity(const FidelityArgs &a, std::ostream &out) {
    NoiseConfig cfg;
    cfg.eps_scale = a.eps;
    cfg.eps_low = a.eps_low;
    cfg.seed = a.seed;
    cfg.trials = a.trials;
    cfg.sampling = parse_sampling(a.sampling);
    FidelityReport report = fidelity_avg(a.qubits, a.steps, cfg, a.threads);
    for (size_t k = 0; k < report.per_input_fidelity.size(); k++) {
        out << "start " << k << ": " << fixed10(report.per_input_fidelity[k]) << "\n";
    }
    out << "mean_fidelity=" << fixed10(report.mean_fidelity)
        << " std_error=" << fixed10(report.std_error) << "\n";
    if (!a.json.empty()) {
        write_file(a.json, fidelity_report_json(report));
    }
    return kExitOk;
}

int do_sweep(const SweepArgs &a, std::ostream &out) {
    SweepConfig cfg;
    cfg.num_qubits = a.qubits;
    cfg.threads = a.threads;
    cfg.base.eps_low = a.eps_low;
    cfg.base.seed = a.seed;
    cfg.base.trials = a.trials;
    cfg.base.sampling = parse_sampling(a.sampling);
    if (!a.eps_grid.empty()) {
        std::string_view rest = a.eps_grid;
        while (true) {
            size_t comma = rest.find(',');
            cfg.eps_grid.push_back(parse_double(rest.substr(0, comma), "--eps-grid"));
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
    } else {
        std::string_view text = a.eps_range;
        size_t colon = text.rfind(':');
        if (colon == std::string_view::npos) {
            throw UsageError("--eps-range: expected LO..HI:POINTS, got '" + a.eps_range + "'");
        }
        auto [lo, hi] = split_range(text.substr(0, colon), "--eps-range");
        cfg.eps_grid = eps_range(parse_double(lo, "--eps-range"), parse_double(hi, "--eps-range"),
                                 parse_size(text.substr(colon + 1), "--eps-range"));
    }
    auto [lo, hi] = split_range(a.steps, "--steps");
    cfg.min_steps = parse_size(lo, "--steps");
    cfg.max_steps = parse_size(hi, "--steps");
    std::vector<SweepRow> rows = sweep_fidelity(cfg);
    write_file(a.csv, sweep_csv(rows));
    out << "wrote " << rows.size() << " rows to " << a.csv << "\n";
    return kExitOk;
}

int do_count(const CountArgs &a, std::ostream &out) {
    GateCounts counts = a.in.empty() ? walker_cnot_count(a.walker) : count_gates(parse_qwc(read_file(a.in)));
    out << "cnot=" << counts.cnot << " single_qubit=" << counts.single_qubit;
    for (const auto &[arity, n] : counts.mcx_by_arity) {
        out << " mcx" << arity << "=" << n;
    }
    out << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum walk circuits: transpilation, simulation and noisy fidelity sweeps", "qwalk"};
    app.require_subcommand(1, 1);

    DecomposeArgs dec;
    auto *decompose = app.add_subcommand("decompose", "Lower a QWC circuit to a smaller gate set");
    decompose->add_option("--in", dec.in, "Input QWC file")->required();
    decompose->add_option("--out", dec.out, "Output QWC file")->required();
    decompose->add_option("--level", dec.level, "negctrl | toffoli | cnot")->required();
    decompose->add_flag("--no-verify", dec.no_verify, "Skip the unitary equivalence check");

    SimulateArgs sim;
    auto *simulate_cmd = app.add_subcommand("simulate", "Run a QWC circuit on a basis state");
    simulate_cmd->add_option("--in", sim.in, "Input QWC file")->required();
    simulate_cmd->add_option("--state", sim.state, "Input bits, highest qubit first")->required();
    simulate_cmd->add_option("--amplitudes", sim.amplitudes, "Write amplitudes as JSON");

    WalkArgs walk;
    auto *walk_cmd = app.add_subcommand("walk", "Ideal walker evolution");
    walk_cmd->add_option("--qubits", walk.qubits, "Register width N (coin + N-1 position bits)")->required();
    walk_cmd->add_option("--start", walk.start, "Start position k")->required();
    walk_cmd->add_option("--steps", walk.steps, "Number of steps m")->required();
    walk_cmd->add_option("--coin", walk.coin, "Initial coin (0 or 1)")->check(CLI::Range(0, 1));
    walk_cmd->add_option("--emit-circuit", walk.emit_circuit, "Write the m-step circuit as QWC");
    walk_cmd->add_option("--amplitudes", walk.amplitudes, "Write amplitudes as JSON");

    FidelityArgs fid;
    auto *fid_cmd = app.add_subcommand("fidelity", "Monte-Carlo fidelity of the noisy walker");
    fid_cmd->add_option("--qubits", fid.qubits, "Register width N")->required();
    fid_cmd->add_option("--steps", fid.steps, "Number of steps m")->required();
    fid_cmd->add_option("--eps", fid.eps, "Upper bound of the error amplitude range")->required();
    fid_cmd->add_option("--eps-low", fid.eps_low, "Lower bound of the error amplitude range");
    fid_cmd->add_option("--trials", fid.trials, "Monte-Carlo trials")->required();
    fid_cmd->add_option("--seed", fid.seed, "RNG seed")->required();
    fid_cmd->add_option("--json", fid.json, "Write the report as JSON");
    fid_cmd->add_option("--sampling", fid.sampling, "fresh (per gate) | fixed (per trial)");
    fid_cmd->add_option("--threads", fid.threads, "Worker threads")->check(CLI::PositiveNumber);

    SweepArgs sw;
    auto *sweep = app.add_subcommand("sweep", "Fidelity over an (eps, steps) grid, written as CSV");
    auto *grid_opt = sweep->add_option("--eps-grid", sw.eps_grid, "Comma-separated eps values");
    auto *range_opt = sweep->add_option("--eps-range", sw.eps_range, "LO..HI:POINTS (log-spaced when LO > 0)");
    grid_opt->excludes(range_opt);
    range_opt->excludes(grid_opt);
    sweep->add_option("--steps", sw.steps, "A..B")->required();
    sweep->add_option("--trials", sw.trials, "Monte-Carlo trials per grid point")->required();
    sweep->add_option("--seed", sw.seed, "RNG seed")->required();
    sweep->add_option("--csv", sw.csv, "Output CSV file")->required();
    sweep->add_option("--qubits", sw.qubits, "Register width N (default 4)");
    sweep->add_option("--eps-low", sw.eps_low, "Lower bound of the error amplitude range");
    sweep->add_option("--sampling", sw.sampling, "fresh (per gate) | fixed (per trial)");
    sweep->add_option("--threads", sw.threads, "Worker threads")->check(CLI::PositiveNumber);

    CountArgs cnt;
    auto *count = app.add_subcommand("count", "Gate counts of the transpiled walker step or a QWC file");
    auto *walker_opt = count->add_option("--walker", cnt.walker, "Walker width N");
    auto *in_opt = count->add_option("--in", cnt.in, "Input QWC file");
    walker_opt->excludes(in_opt);
    in_opt->excludes(walker_opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (sweep->parsed() && sw.eps_grid.empty() && sw.eps_range.empty()) {
            throw CLI::RequiredError("sweep needs --eps-grid or --eps-range");
        }
        if (count->parsed() && walker_opt->count() == 0 && in_opt->count() == 0) {
            throw CLI::RequiredError("count needs --walker or --in");
        }
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (decompose->parsed()) {
            return do_decompose(dec, out);
        }
        if (simulate_cmd->parsed()) {
            return do_simulate(sim, out);
        }
        if (walk_cmd->parsed()) {
            return do_walk(walk, out);
        }
        if (fid_cmd->parsed()) {
            return do_fidelity(fid, out);
        }
        if (sweep->parsed()) {
            return do_sweep(sw, out);
        }
        return do_count(cnt, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitContract;
    }
}

}  // namespace qwalk::cli
