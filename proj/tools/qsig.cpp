// Command-line front end: parameter derivation, simulation campaigns,
// exhaustive conjecture checking, GC01 baseline evaluation, and figure-data
// export. Exit codes: 0 success, 1 conjecture counterexample,
// 2 inadmissible parameters, 64 usage error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsig/adversary.hpp"
#include "qsig/analysis.hpp"
#include "qsig/conjecture.hpp"
#include "qsig/errors.hpp"
#include "qsig/gc_baseline.hpp"
#include "qsig/protocol.hpp"
#include "qsig/table_io.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) std::cout << content;
    else qsig::write_file(out_path, content);
}

json scheme_block(const qsig::SchemeParams& p) {
    json j;
    j["S"] = p.S();
    j["d"] = p.d;
    j["ell"] = p.ell();
    j["hidden_length"] = p.hidden_length();
    j["alpha"] = p.alpha();
    j["phi"] = p.phi();
    j["T"] = p.T;
    j["theta"] = p.code.theta;
    j["N"] = p.code.codeword_length;
    j["K"] = p.code.message_length;
    j["z_acc"] = p.z_acc;
    j["z_rej"] = p.z_rej;
    j["eps_c"] = p.eps_c;
    j["eps_f"] = p.eps_f;
    j["nu"] = p.nu;
    return j;
}

json figures_block(const qsig::FiguresOfMerit& fom) {
    json j;
    j["g"] = fom.g;
    j["j"] = fom.j;
    j["p1"] = fom.p1;
    j["gap"] = fom.gap;
    j["qubits_per_bit_exact"] = fom.qubits.exact;
    j["qubits_per_bit_asymptotic"] = fom.qubits.asymptotic;
    j["repudiation_bound"] = fom.repudiation_bound;
    j["repudiation_bound_note"] = "multiplicative 1+O(alpha) slack omitted";
    return j;
}

struct ParamFlags {
    double alpha = 0.0;
    std::int64_t d = 0;
    int T = 0;
    double nu = 0.2, eps_c = 1e-9, eps_f = 1e-12;
    bool no_correction = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "Inverse alphabet size 1/S")->required();
        cmd->add_option("--d", d, "Hilbert-space dimension / key length")->required();
        cmd->add_option("--T", T, "Number of verifiers")->required();
        cmd->add_option("--nu", nu, "Margin constant in theta=(alpha/2)(1+nu)")->capture_default_str();
        cmd->add_option("--eps-c", eps_c, "Correctness error budget")->capture_default_str();
        cmd->add_option("--eps-f", eps_f, "Forgery error budget")->capture_default_str();
        cmd->add_flag("--no-p1-correction", no_correction,
                      "Drop the finite-size sqrt(d-ell)/ell term from the forgery bound");
    }

    qsig::SchemeParams derive() const {
        return qsig::derive_parameters(alpha, d, T, nu, eps_c, eps_f, !no_correction);
    }
};

int run_params(const ParamFlags& flags, const std::string& out_path) {
    const auto params = flags.derive();
    const auto fom = qsig::figures_of_merit(params, !flags.no_correction);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "params";
    doc["scheme"] = scheme_block(params);
    doc["figures_of_merit"] = figures_block(fom);
    emit(doc.dump(2) + "\n", out_path);
    return 0;
}

int run_simulate(const ParamFlags& flags, const std::string& mode, std::int64_t trials,
                 std::uint64_t seed, const std::string& out_path,
                 const std::string& histogram_path) {
    const auto params = flags.derive();
    qsig::Scenario scenario;
    if (mode == "genuine") scenario = qsig::Scenario::genuine;
    else if (mode == "forge") scenario = qsig::Scenario::forgery;
    else scenario = qsig::Scenario::tuned_repudiation;

    const auto stats = qsig::run_trials(scenario, params, trials, seed);
    const auto dist = stats.empirical();

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "simulate";
    doc["mode"] = mode;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["scheme"] = scheme_block(params);
    json res;
    res["verifications"] = stats.verifications();
    res["q_r"] = dist.q_r;
    res["q_0"] = dist.q_0;
    res["q_1"] = dist.q_1;
    res["stderr_q_r"] = stats.stderr_of(dist.q_r);
    res["stderr_q_0"] = stats.stderr_of(dist.q_0);
    res["stderr_q_1"] = stats.stderr_of(dist.q_1);
    res["verdicts"] = {{"rej", stats.n_rej}, {"acc0", stats.n_acc0}, {"acc1", stats.n_acc1}};
    res["repudiation_rate"] = stats.repudiation_rate();
    res["repudiation_rate_stderr"] =
        std::sqrt(stats.repudiation_rate() * (1.0 - stats.repudiation_rate()) /
                  static_cast<double>(stats.trials));
    res["mean_tally"] = stats.mean_tally();
    doc["results"] = res;
    emit(doc.dump(2) + "\n", out_path);
    qsig::write_file(histogram_path, qsig::histogram_csv(stats.tally_histogram));
    return 0;
}

int run_sweep(int T, const std::vector<double>& alphas, double d_min, double d_max, int points,
              const std::string& axis, double nu, double eps_c, double eps_f,
              const std::string& format, const std::string& out_path) {
    qsig::SweepConfig cfg;
    cfg.T = T;
    cfg.alphas = alphas;
    cfg.d_min = static_cast<std::int64_t>(d_min);
    cfg.d_max = static_cast<std::int64_t>(d_max);
    cfg.points = points;
    cfg.nu = nu;
    cfg.eps_c = eps_c;
    cfg.eps_f = eps_f;
    cfg.axis = axis == "codelength" ? qsig::SweepAxis::codelength : qsig::SweepAxis::gap;
    const auto rows = qsig::sweep(cfg);

    if (format == "json") {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "sweep";
        json arr = json::array();
        for (const auto& r : rows) {
            json row;
            row["alpha"] = r.alpha;
            row["d"] = r.d;
            row["theta"] = r.theta;
            if (r.n_codeword >= 0) row["N"] = r.n_codeword;
            if (!std::isnan(r.p1)) row["p1"] = r.p1;
            if (!std::isnan(r.gap)) row["gap"] = r.gap;
            if (!std::isnan(r.qubits_per_bit)) row["qubits_per_bit"] = r.qubits_per_bit;
            if (!std::isnan(r.gc_qubits_per_bit)) row["gc_qubits_per_bit"] = r.gc_qubits_per_bit;
            row["admissible"] = r.admissible;
            row["d_requested"] = r.d_requested;
            arr.push_back(row);
        }
        doc["rows"] = arr;
        emit(doc.dump(2) + "\n", out_path);
    } else {
        emit(qsig::sweep_csv(rows), out_path);
    }
    return 0;
}

int run_conjecture(std::int64_t x_max, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = qsig::scan_radius_monotonic(x_max);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "conjecture";
    doc["x_max"] = x_max;
    doc["holds"] = rep.holds;
    doc["largest_x_checked"] = rep.largest_x;
    if (rep.holds) {
        doc["counterexample"] = nullptr;
        std::cout << "monotonicity holds up to x = " << rep.largest_x << " ("
                  << qsig::format_value(secs) << " s wall clock)\n";
    } else {
        json ce;
        ce["x"] = rep.x;
        ce["r"] = rep.radius;
        ce["f_at_r"] = rep.f_at_r.get_str();
        ce["f_at_r_next"] = rep.f_at_r_next.get_str();
        doc["counterexample"] = ce;
        std::cout << "counterexample at x = " << rep.x << ", r = " << rep.radius
                  << ": f(x,r) = " << rep.f_at_r.get_str()
                  << ", f(x,r+1) = " << rep.f_at_r_next.get_str() << " ("
                  << qsig::format_value(secs) << " s wall clock)\n";
    }
    if (!out_path.empty()) qsig::write_file(out_path, doc.dump(2) + "\n");
    return rep.holds ? 0 : 1;
}

int run_gc(std::int64_t d, double gamma, double beta, int T, bool reuse, double qr_target,
           const std::string& out_path) {
    qsig::GCParams p;
    p.d = d;
    p.gamma = gamma;
    p.beta = beta;
    p.T = T;
    p.reuse = reuse;
    p.q_r_target = qr_target;

    const auto forge = qsig::gc_forge1(p);
    const auto dmin = qsig::gc_min_dimension(T, gamma);
    const double n_min = qsig::gc_min_codeword(beta, forge.j_gc, qr_target);

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "gc";
    json in;
    in["d"] = d;
    in["gamma"] = gamma;
    in["beta"] = beta;
    in["T"] = T;
    in["reuse"] = reuse;
    in["qr_target"] = qr_target;
    doc["inputs"] = in;
    json res;
    res["delta"] = qsig::gc_delta(gamma);
    res["key_bits"] = static_cast<double>(d) * (1.0 - qsig::binary_entropy(gamma));
    res["p_forge1"] = forge.p_forge1;
    res["j_gc"] = forge.j_gc;
    res["d_min_solved"] = dmin.solved;
    res["d_min_approx"] = dmin.approx;
    res["n_min"] = n_min;
    res["qubits_per_bit"] = qsig::gc_qubits_per_bit(d, beta, reuse);
    doc["results"] = res;
    emit(doc.dump(2) + "\n", out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis toolkit for nonbinary quantum digital signatures"};
    app.require_subcommand(1);

    // params
    auto* cmd_params = app.add_subcommand("params", "Derive scheme parameters and figures of merit");
    ParamFlags params_flags;
    params_flags.attach(cmd_params);
    std::string params_out;
    cmd_params->add_option("--out", params_out, "Output file (stdout when omitted)");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo protocol runs");
    ParamFlags sim_flags;
    sim_flags.attach(cmd_sim);
    std::string sim_mode;
    std::int64_t sim_trials = 0;
    std::uint64_t sim_seed = 0;
    std::string sim_out, sim_hist = "histogram.csv";
    cmd_sim->add_option("--mode", sim_mode, "genuine | forge | repudiate")
        ->required()
        ->check(CLI::IsMember({"genuine", "forge", "repudiate"}));
    cmd_sim->add_option("--trials", sim_trials, "Number of protocol runs")->required();
    cmd_sim->add_option("--seed", sim_seed, "64-bit seed")->capture_default_str();
    cmd_sim->add_option("--out", sim_out, "Summary file (stdout when omitted)");
    cmd_sim->add_option("--histogram", sim_hist, "Tally histogram CSV path")->capture_default_str();

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Qubit-cost tradeoff table");
    int sweep_T = 0, sweep_points = 0;
    std::vector<double> sweep_alphas;
    double sweep_dmin = 0, sweep_dmax = 0, sweep_nu = 0.2, sweep_eps_c = 1e-9, sweep_eps_f = 1e-12;
    std::string sweep_axis = "gap", sweep_format = "csv", sweep_out;
    cmd_sweep->add_option("--T", sweep_T, "Number of verifiers")->required();
    cmd_sweep->add_option("--alpha-list", sweep_alphas, "Alpha values")->required()->delimiter(',');
    cmd_sweep->add_option("--d-min", sweep_dmin, "Smallest dimension")->required();
    cmd_sweep->add_option("--d-max", sweep_dmax, "Largest dimension")->required();
    cmd_sweep->add_option("--points", sweep_points, "Dimensions per alpha (log-sampled)")->required();
    cmd_sweep->add_option("--x-axis", sweep_axis, "Row ordering")->capture_default_str()
        ->check(CLI::IsMember({"gap", "codelength"}));
    cmd_sweep->add_option("--nu", sweep_nu, "Margin constant")->capture_default_str();
    cmd_sweep->add_option("--eps-c", sweep_eps_c, "Correctness error budget")->capture_default_str();
    cmd_sweep->add_option("--eps-f", sweep_eps_f, "Forgery error budget")->capture_default_str();
    cmd_sweep->add_option("--format", sweep_format, "csv | json")->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--out", sweep_out, "Output file (stdout when omitted)");

    // conjecture
    auto* cmd_conj = app.add_subcommand("conjecture", "Exhaustive exact monotonicity check");
    std::int64_t conj_xmax = 16384;
    std::string conj_out;
    cmd_conj->add_option("--x-max", conj_xmax, "Largest x to check")->capture_default_str();
    cmd_conj->add_option("--out", conj_out, "Report file (JSON)");

    // gc
    auto* cmd_gc = app.add_subcommand("gc", "GC01 baseline figures");
    std::int64_t gc_d = 0;
    double gc_gamma = 0, gc_beta = 0, gc_qr = 1.0 - 1e-12;
    int gc_T = 0;
    bool gc_reuse = false;
    std::string gc_out;
    cmd_gc->add_option("--d", gc_d, "Qudit dimension")->required();
    cmd_gc->add_option("--gamma", gc_gamma, "Embedding-code rate parameter")->required();
    cmd_gc->add_option("--beta", gc_beta, "Message-code rate parameter")->required();
    cmd_gc->add_option("--T", gc_T, "Number of public-key copies")->required();
    cmd_gc->add_flag("--reuse", gc_reuse, "Re-use unopened public keys");
    cmd_gc->add_option("--qr-target", gc_qr, "Target forgery detection probability")->capture_default_str();
    cmd_gc->add_option("--out", gc_out, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*cmd_params) return run_params(params_flags, params_out);
        if (*cmd_sim)
            return run_simulate(sim_flags, sim_mode, sim_trials, sim_seed, sim_out, sim_hist);
        if (*cmd_sweep)
            return run_sweep(sweep_T, sweep_alphas, sweep_dmin, sweep_dmax, sweep_points,
                             sweep_axis, sweep_nu, sweep_eps_c, sweep_eps_f, sweep_format,
                             sweep_out);
        if (*cmd_conj) return run_conjecture(conj_xmax, conj_out);
        if (*cmd_gc) return run_gc(gc_d, gc_gamma, gc_beta, gc_T, gc_reuse, gc_qr, gc_out);
    } catch (const qsig::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
