// Copyright 2026 The Blindgate Authors
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

#include "blindgate/cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "blindgate/classical.h"
#include "blindgate/errors.h"
#include "blindgate/gates.h"
#include "blindgate/hierarchy.h"
#include "blindgate/honesty.h"
#include "blindgate/runner.h"
#include "blindgate/security.h"

namespace blindgate {

namespace {

enum class Format { kText, kRecords };

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixed(double v, int digits = 12) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

/// Bit k of `index`, printed with k = 0 leftmost.
std::string bits_of(uint64_t index, size_t width) {
    std::string s;
    for (size_t k = 0; k < width; k++) {
        s += (index >> k) & 1 ? '1' : '0';
    }
    return s;
}

std::string wire_list(const std::vector<size_t> &wires) {
    std::string s;
    for (size_t w : wires) {
        s += (s.empty() ? "" : ",") + std::to_string(w);
    }
    return s;
}

Complex parse_complex(const std::string &token, size_t line) {
    auto fail = [&]() -> Complex {
        throw ParseError(line, "cannot read complex entry '" + token + "'");
    };
    auto number = [&](const std::string &s, bool imaginary) -> double {
        if (imaginary && (s.empty() || s == "+" || s == "-")) {
            return s == "-" ? -1.0 : 1.0;
        }
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            fail();
        }
        if (used != s.size()) {
            fail();
        }
        return v;
    };
    if (token.empty()) {
        fail();
    }
    if (token.back() != 'i') {
        return {number(token, false), 0.0};
    }
    std::string body = token.substr(0, token.size() - 1);
    // Split at the last sign that is not part of an exponent or the leading sign.
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            return {number(body.substr(0, k), false), number(body.substr(k), true)};
        }
    }
    return {0.0, number(body, true)};
}

std::optional<uint64_t> seed_from_env() {
    const char *env = std::getenv("BLINDGATE_SEED");
    if (env == nullptr || *env == '\0') {
        return std::nullopt;
    }
    try {
        size_t used;
        uint64_t v = std::stoull(env, &used);
        if (env[used] == '\0') {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw ParseError(0, std::string("BLINDGATE_SEED is not an unsigned integer: '") + env + "'");
}

UnitaryMatrix substitute_gate(const std::string &name) {
    auto spec = gates::by_name(name);
    if (!spec.has_value()) {
        throw ParseError(0, "unknown substitute gate '" + name + "'");
    }
    return spec->unitary;
}

struct RunArgs {
    std::string circuit;
    std::string bob = "honest";
    std::string substitute = "X";
    std::string mode = "plain";
    size_t shots = 1;
    size_t cycles = 0;
};

int cmd_run(const RunArgs &args, uint64_t seed, Format format, std::ostream &out, std::ostream &err) {
    Circuit circuit = Circuit::from_file(args.circuit);
    auto strategy = strategy_from_name(args.bob, substitute_gate(args.substitute));
    if (!strategy.has_value()) {
        throw ParseError(0, "unknown Bob strategy '" + args.bob + "'");
    }
    RunOptions options;
    options.mode = args.mode == "blind" ? RunMode::kBlind : RunMode::kPlain;
    options.cycles = args.cycles;
    options.exact_measurements = args.shots == 0;
    bool honest = std::holds_alternative<Honest>(*strategy);
    StateVector initial = StateVector::zero(std::max<size_t>(circuit.num_qubits(), 1));
    auto measured = circuit.measured_wires();

    auto print_transcript = [&](const Transcript &t) {
        if (format == Format::kText) {
            out << "transcript (" << t.rounds.size() << " rounds):\n";
        }
        out << t.export_log();
    };

    std::map<std::string, size_t> counts;
    std::optional<RunResult> first;
    size_t runs = std::max<size_t>(args.shots, 1);
    for (size_t shot = 0; shot < runs; shot++) {
        options.seed = derive_seed(seed, 2 * shot);
        Bob bob(*strategy, derive_seed(seed, 2 * shot + 1));
        try {
            RunResult r = run_circuit(circuit, bob, options);
            std::string outcome;
            for (bool b : r.measurements) {
                outcome += b ? '1' : '0';
            }
            counts[outcome]++;
            if (!first.has_value()) {
                first = std::move(r);
            }
        } catch (const CircuitAbort &abort) {
            print_transcript(abort.partial);
            if (format == Format::kText) {
                out << "aborted: " << abort.what() << "\n";
            } else {
                out << "status=aborted\n";
            }
            return kExitAbort;
        }
    }

    if (format == Format::kText) {
        out << "mode: " << args.mode << "\nbob: " << strategy_name(*strategy) << "\n";
        if (options.mode == RunMode::kBlind) {
            out << "cycles: " << first->cycles << "\n";
        }
        out << "gate requests: " << first->gate_requests << "\n";
    } else {
        out << "mode=" << args.mode << " bob=" << strategy_name(*strategy) << " requests=" << first->gate_requests
            << "\n";
    }
    print_transcript(first->transcript);

    bool ok = true;
    if (!measured.empty()) {
        if (format == Format::kText) {
            out << "measured wires (left to right): " << wire_list(measured) << "\n";
        }
        if (args.shots == 0) {
            const auto &dist = *first->distribution;
            for (uint64_t k = 0; k < dist.size(); k++) {
                if (dist[k] > 1e-12) {
                    if (format == Format::kText) {
                        out << "  " << bits_of(k, measured.size()) << "  " << fixed(dist[k]) << "\n";
                    } else {
                        out << "outcome=" << bits_of(k, measured.size()) << " probability=" << fixed(dist[k]) << "\n";
                    }
                }
            }
            if (honest) {
                double tv = total_variation(dist, ideal_distribution(circuit, initial));
                ok = tv <= 1e-9;
                out << (format == Format::kText ? "total variation vs direct simulation: " : "tv=") << sci(tv)
                    << "\n";
            }
        } else {
            for (const auto &[outcome, count] : counts) {
                if (format == Format::kText) {
                    out << "  " << outcome << "  " << count << "\n";
                } else {
                    out << "outcome=" << outcome << " count=" << count << "\n";
                }
            }
        }
    } else if (honest) {
        double f = fidelity(first->final_state, simulate_gates(circuit, initial));
        ok = f >= 1 - 1e-9;
        out << (format == Format::kText ? "fidelity vs direct simulation: " : "fidelity=") << fixed(f) << "\n";
    }
    if (!ok) {
        err << "result disagrees with direct simulation\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_verify_security(
    const std::string &target, size_t random_inputs, const std::string &mode, uint64_t seed, Format format,
    std::ostream &out) {
    std::optional<ProtocolUnderTest> protocol = named_protocol(target);
    if (!protocol.has_value()) {
        Circuit circuit = Circuit::from_file(target);
        protocol = mode == "plain" ? plain_circuit_protocol(circuit) : blind_circuit_protocol(circuit);
    }
    auto inputs = security_inputs(protocol->num_wires, random_inputs, seed);
    ViewOptions view_options;
    view_options.seed = seed;
    auto report = security_report(*protocol, inputs, view_options);
    bool ok = report.passed();
    if (format == Format::kText) {
        out << "protocol: " << report.protocol << " (" << inputs.size() << " inputs)\n";
        for (size_t r = 0; r < report.labels.size(); r++) {
            out << "  round " << r << " " << std::left << std::setw(8) << report.labels[r]
                << " distance to maximally mixed " << sci(report.distance_to_mixed[r]) << "\n";
        }
        out << "max view distance between inputs: " << sci(report.max_view_distance) << "\n";
        out << "result: " << (ok ? "pass" : "FAIL") << "\n";
    } else {
        for (size_t r = 0; r < report.labels.size(); r++) {
            out << "round=" << r << " request=" << report.labels[r]
                << " distance=" << sci(report.distance_to_mixed[r]) << "\n";
        }
        out << "view_independence=" << sci(report.max_view_distance) << " status=" << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(
    const std::string &gate, const std::string &matrix_file, bool classical, bool no_go, int max_k, uint64_t seed,
    Format format, std::ostream &out, std::ostream &err) {
    if (no_go) {
        auto report = demonstrate_no_go(seed);
        for (const auto &fact : report.facts) {
            if (format == Format::kText) {
                out << (fact.holds ? "  holds  " : "  FAILS  ") << fact.statement << "\n";
            } else {
                out << "fact=\"" << fact.statement << "\" holds=" << (fact.holds ? 1 : 0) << "\n";
            }
        }
        return report.all_hold() ? kExitOk : kExitVerificationFailed;
    }
    auto level_text = [&](std::optional<int> level) {
        return level.has_value() ? std::to_string(*level) : "> " + std::to_string(max_k);
    };
    if (classical) {
        auto g = ReversibleGate::by_name(gate);
        if (!g.has_value()) {
            err << "unknown classical gate '" << gate << "'\n";
            return kExitUsage;
        }
        auto level = tilde_level(*g, max_k);
        out << (format == Format::kText ? "classical level: " : "classical_level=") << level_text(level) << "\n";
        return kExitOk;
    }
    std::string name = gate;
    UnitaryMatrix u = UnitaryMatrix::identity(1);
    if (!matrix_file.empty()) {
        Matrix m = parse_matrix_text(read_file(matrix_file));
        try {
            u = UnitaryMatrix::from_matrix(m);
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        name = matrix_file;
    } else {
        auto spec = gates::by_name(gate);
        if (!spec.has_value()) {
            err << "unknown gate '" << gate << "'; known: ";
            for (const auto &n : gates::names()) {
                err << n << " ";
            }
            err << "\n";
            return kExitUsage;
        }
        u = spec->unitary;
        name = spec->name;
    }
    auto verdict = classify(u, max_k);
    if (format == Format::kText) {
        out << name << ": level " << level_text(verdict.level) << "\n";
        for (const auto &w : verdict.witnesses) {
            auto pauli = recognize_pauli(w.image);
            out << "  " << w.generator.str() << " -> "
                << (pauli.has_value() ? pauli->str() : std::string("non-Pauli")) << " (level "
                << level_text(w.image_level) << ")\n";
        }
    } else {
        out << "gate=" << name << " level=" << level_text(verdict.level) << "\n";
        for (const auto &w : verdict.witnesses) {
            out << "generator=" << w.generator.str() << " image_level=" << level_text(w.image_level) << "\n";
        }
    }
    return kExitOk;
}

int cmd_honesty(
    const std::string &adversary, const std::string &substitute, const std::string &gate, size_t trials,
    double threshold, uint64_t seed, Format format, std::ostream &out) {
    auto strategy = strategy_from_name(adversary, substitute_gate(substitute));
    if (!strategy.has_value()) {
        throw ParseError(0, "unknown adversary '" + adversary + "'");
    }
    auto kind = probe_gate_from_name(gate);
    if (!kind.has_value()) {
        throw ParseError(0, "unknown probe gate '" + gate + "'");
    }
    SpotCheckOptions options;
    options.trials = trials;
    options.threshold = threshold;
    options.seed = seed;
    auto result = spot_check(*strategy, *kind, options);
    if (format == Format::kText) {
        out << "adversary: " << strategy_name(*strategy) << "\ngate: " << probe_gate_name(*kind)
            << "\ntrials: " << trials << "\n";
        for (const auto &[label, dev] : result.deviation_by_probe) {
            out << "  " << std::left << std::setw(16) << label << " deviation " << fixed(dev, 4) << "\n";
        }
        out << "deviation: " << fixed(result.deviation, 4) << " (threshold " << fixed(threshold, 4) << ")\n";
        out << "result: " << (result.passed() ? "pass" : "cheating detected") << "\n";
    } else {
        out << spot_check_records(result);
        out << "deviation=" << fixed(result.deviation, 6) << " status=" << (result.passed() ? "pass" : "fail") << "\n";
    }
    return result.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_np_check(const std::vector<std::string> &values, const std::string &cnf_file, std::ostream &out) {
    NpVerdict verdict;
    if (!cnf_file.empty()) {
        CnfFormula formula = CnfFormula::parse_dimacs(read_file(cnf_file));
        std::vector<bool> assignment;
        for (const auto &v : values) {
            if (v != "0" && v != "1") {
                throw ParseError(0, "assignment values must be 0 or 1, got '" + v + "'");
            }
            assignment.push_back(v == "1");
        }
        verdict = verify_np_answer(formula, assignment);
    } else {
        if (values.empty()) {
            throw ParseError(0, "np-check needs a number followed by its claimed factors");
        }
        std::vector<uint64_t> nums;
        for (const auto &v : values) {
            size_t used = 0;
            try {
                nums.push_back(std::stoull(v, &used));
            } catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != v.size() || v[0] == '-') {
                throw ParseError(0, "not an unsigned integer: '" + v + "'");
            }
        }
        verdict = verify_np_answer(
            FactoringInstance{nums[0]}, std::vector<uint64_t>(nums.begin() + 1, nums.end()));
    }
    out << np_verdict_name(verdict) << "\n";
    return verdict == NpVerdict::kVerified ? kExitOk : kExitVerificationFailed;
}

int cmd_blind_sat(const std::string &cnf_file, size_t vars, size_t clauses, uint64_t seed, Format format, std::ostream &out) {
    Rng rng(seed);
    CnfFormula formula =
        cnf_file.empty() ? random_planted_3cnf(vars, clauses, rng) : CnfFormula::parse_dimacs(read_file(cnf_file));
    auto blinded = blind_sat(formula, rng);
    auto solution = brute_force_solve(blinded.formula);
    auto bools = [](const std::vector<bool> &b) {
        std::string s;
        for (bool x : b) {
            s += x ? '1' : '0';
        }
        return s;
    };
    if (format == Format::kText) {
        out << "original:\n" << formula.to_dimacs() << "mask: " << bools(blinded.mask) << "\nsent to Bob:\n"
            << blinded.formula.to_dimacs();
    } else {
        out << "mask=" << bools(blinded.mask) << "\n";
    }
    if (!solution.has_value()) {
        out << (format == Format::kText ? "Bob: unsatisfiable\n" : "status=unsatisfiable\n");
        return kExitVerificationFailed;
    }
    auto witness = unblind_assignment(*solution, blinded.mask);
    bool ok = verify_np_answer(formula, witness) == NpVerdict::kVerified;
    if (format == Format::kText) {
        out << "Bob's assignment: " << bools(*solution) << "\nunblinded:        " << bools(witness)
            << "\nresult: " << (ok ? "verified" : "FAILED") << "\n";
    } else {
        out << "bob=" << bools(*solution) << " witness=" << bools(witness) << " status=" << (ok ? "verified" : "fail")
            << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Matrix parse_matrix_text(std::string_view text) {
    std::vector<std::vector<Complex>> rows;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line = 0;
    while (std::getline(in, raw)) {
        line++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream words(raw);
        std::vector<Complex> row;
        for (std::string tok; words >> tok;) {
            row.push_back(parse_complex(tok, line));
        }
        if (row.empty()) {
            continue;
        }
        if (!rows.empty() && row.size() != rows[0].size()) {
            throw ParseError(line, "row has " + std::to_string(row.size()) + " entries, expected " +
                                       std::to_string(rows[0].size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.size() != rows[0].size()) {
        throw ParseError(line, "matrix must be square and nonempty");
    }
    Matrix m((Eigen::Index)rows.size(), (Eigen::Index)rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < rows.size(); c++) {
            m((Eigen::Index)r, (Eigen::Index)c) = rows[r][c];
        }
    }
    return m;
}

std::optional<BobStrategy> strategy_from_name(std::string_view name, const UnitaryMatrix &substitute) {
    if (name == "honest") {
        return Honest{};
    }
    if (name == "wrong-gate") {
        return WrongGate{substitute};
    }
    if (name == "scramble") {
        return Scramble{};
    }
    if (name == "lie") {
        return LieOnMeasurement{};
    }
    if (name == "drop") {
        return Drop{};
    }
    return std::nullopt;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Secure assisted quantum computation: run, verify and classify"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<uint64_t> seed_flag;
    std::string format_name = "text";
    app.add_option("--seed", seed_flag, "Seed for every random choice (default: $BLINDGATE_SEED or 0)");
    app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "records"}));

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "Run a circuit through the assisted protocols");
    run_cmd->add_option("circuit", run.circuit, "Circuit file")->required();
    run_cmd->add_option("--bob", run.bob, "Bob's strategy")
        ->check(CLI::IsMember({"honest", "wrong-gate", "scramble", "lie", "drop"}));
    run_cmd->add_option("--substitute", run.substitute, "Gate a wrong-gate Bob applies instead");
    run_cmd->add_option("--mode", run.mode, "plain or blind")->check(CLI::IsMember({"plain", "blind"}));
    run_cmd->add_option("--shots", run.shots, "Number of runs; 0 prints the exact distribution");
    run_cmd->add_option("--cycles", run.cycles, "Blind mode: pad to this many cycles");

    std::string security_target, security_mode = "blind";
    size_t security_inputs_count = 20;
    auto *sec_cmd = app.add_subcommand("verify-security", "Check Bob's view of a protocol or circuit");
    sec_cmd->add_option("target", security_target, "Protocol name or circuit file")->required();
    sec_cmd->add_option("--inputs", security_inputs_count, "Random input states besides the basis states");
    sec_cmd->add_option("--mode", security_mode, "Mode for circuit files")->check(CLI::IsMember({"plain", "blind"}));
    sec_cmd->footer("Protocols: hadamard cnot t-gate measure toffoli key-reuse cnot-no-fix");

    std::string classify_gate, matrix_file;
    bool classify_classical = false, classify_no_go = false;
    int max_k = 4;
    auto *cls_cmd = app.add_subcommand("classify", "Hierarchy level of a gate");
    cls_cmd->add_option("gate", classify_gate, "Gate name");
    cls_cmd->add_option("--matrix", matrix_file, "Matrix file, one row per line, entries like 0.5-0.5i");
    cls_cmd->add_flag("--classical", classify_classical, "Classify the reversible classical gate");
    cls_cmd->add_flag("--no-go", classify_no_go, "Print the classical no-go evidence");
    cls_cmd->add_option("--max-k", max_k, "Highest level tested")->check(CLI::Range(1, kMaxHierarchyLevel));

    std::string adversary = "honest", hon_substitute = "X", probe_gate = "H";
    size_t trials = 400;
    double threshold = 0.05;
    auto *hon_cmd = app.add_subcommand("honesty", "Spot-check a memoryless Bob");
    hon_cmd->add_option("--adversary", adversary, "Bob's strategy")
        ->check(CLI::IsMember({"honest", "wrong-gate", "scramble", "lie", "drop"}));
    hon_cmd->add_option("--substitute", hon_substitute, "Gate a wrong-gate Bob applies instead");
    hon_cmd->add_option("--gate", probe_gate, "H, CNOT, T or MEASURE");
    hon_cmd->add_option("--trials", trials, "Number of probe trials")->check(CLI::PositiveNumber);
    hon_cmd->add_option("--threshold", threshold, "Largest accepted deviation");

    std::vector<std::string> np_values;
    std::string np_cnf;
    auto *np_cmd = app.add_subcommand("np-check", "Verify a claimed NP witness");
    np_cmd->add_option("values", np_values, "N f1 f2 ... for factoring, or assignment bits with --cnf");
    np_cmd->add_option("--cnf", np_cnf, "DIMACS formula the assignment should satisfy");

    std::string sat_file;
    size_t sat_vars = 10, sat_clauses = 40;
    auto *sat_cmd = app.add_subcommand("blind-sat-demo", "Hide a SAT instance from Bob and recover the answer");
    sat_cmd->add_option("cnf", sat_file, "DIMACS file (default: random planted 3-CNF)");
    sat_cmd->add_option("--vars", sat_vars, "Variables of the random instance")->check(CLI::Range(3, 20));
    sat_cmd->add_option("--clauses", sat_clauses, "Clauses of the random instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        uint64_t seed = seed_flag.has_value() ? *seed_flag : seed_from_env().value_or(0);
        Format format = format_name == "records" ? Format::kRecords : Format::kText;
        if (run_cmd->parsed()) {
            return cmd_run(run, seed, format, out, err);
        }
        if (sec_cmd->parsed()) {
            return cmd_verify_security(security_target, security_inputs_count, security_mode, seed, format, out);
        }
        if (cls_cmd->parsed()) {
            if (classify_gate.empty() && matrix_file.empty() && !classify_no_go) {
                err << "classify needs a gate name, --matrix or --no-go\n";
                return kExitUsage;
            }
            return cmd_classify(
                classify_gate, matrix_file, classify_classical, classify_no_go, max_k, seed, format, out, err);
        }
        if (hon_cmd->parsed()) {
            return cmd_honesty(adversary, hon_substitute, probe_gate, trials, threshold, seed, format, out);
        }
        if (np_cmd->parsed()) {
            return cmd_np_check(np_values, np_cnf, out);
        }
        if (sat_cmd->parsed()) {
            return cmd_blind_sat(sat_file, sat_vars, sat_clauses, seed, format, out);
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ProtocolAbort &e) {
        err << "aborted: " << e.what() << "\n";
        return kExitAbort;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace blindgate
