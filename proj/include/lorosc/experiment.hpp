#pragma once

// Experiment configuration, presets, runners and deterministic CSV/JSON
// serialization. A config is a single JSON document; flags override file
// values; the fully resolved config is echoed into every output so a run can
// be reproduced from its own artifact.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lorosc/control.hpp"
#include "lorosc/model.hpp"
#include "lorosc/observables.hpp"
#include "lorosc/oracle.hpp"
#include "lorosc/trajectory_engine.hpp"
#include "lorosc/version.hpp"

namespace lorosc {

using json = nlohmann::json;

enum class ExperimentKind { Evolve, Steady, Sweep, Pulse, Mpemba };
enum class OutputFormat { Csv, Json };
enum class OracleChoice { None, Local, Discrete, Both };

struct GridSpec {
    double t_max = 20.0;
    std::size_t n_samples = 801;
};

struct SweepSpec {
    std::string parameter;           ///< model or pulse field name
    std::vector<double> values;
    std::string observable = "trajectory";  ///< "trajectory" | "steady"
};

struct MpembaSpec {
    double Ts_hot = 8.0;
    double Ts_cold = 6.0;
    std::string kick_on = "cold";  ///< "hot" | "cold"
    double band = 0.02;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Evolve;
    ModelParams model;
    QuadratureConfig quad;   ///< zero omega_min/omega_max = use defaults_for(model)
    IntegratorConfig integ;
    PulseSchedule pulse;
    GridSpec grid;
    std::optional<SweepSpec> sweep;
    MpembaSpec mpemba;
    OracleChoice oracle = OracleChoice::None;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    double tol = 1e-9;
    std::uint64_t seed = 0;  ///< reserved; pipeline is deterministic and seed-free

    QuadratureConfig resolved_quad() const {
        QuadratureConfig q = quad;
        const auto d = QuadratureConfig::defaults_for(model);
        if (!(q.omega_min > 0)) q.omega_min = d.omega_min;
        if (!(q.omega_max > 0)) q.omega_max = d.omega_max;
        return q;
    }
};

// ---- JSON mapping -------------------------------------------------------

inline std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Evolve: return "evolve";
        case ExperimentKind::Steady: return "steady";
        case ExperimentKind::Sweep: return "sweep";
        case ExperimentKind::Pulse: return "pulse";
        case ExperimentKind::Mpemba: return "mpemba";
    }
    return "?";
}

inline ExperimentKind experiment_kind_from(const std::string& s) {
    if (s == "evolve") return ExperimentKind::Evolve;
    if (s == "steady") return ExperimentKind::Steady;
    if (s == "sweep") return ExperimentKind::Sweep;
    if (s == "pulse") return ExperimentKind::Pulse;
    if (s == "mpemba") return ExperimentKind::Mpemba;
    throw InvalidParameter("experiment", "unknown kind '" + s + "'");
}

inline void to_json(json& j, const ModelParams& p) {
    j = json{{"omega0", p.omega0}, {"Omega", p.Omega}, {"gamma", p.gamma},
             {"Gamma", p.Gamma},   {"Ts", p.Ts},       {"Tb", p.Tb}};
}
inline void from_json(const json& j, ModelParams& p) {
    p.omega0 = j.value("omega0", 1.0);
    p.Omega = j.value("Omega", 1.0);
    p.gamma = j.value("gamma", 1.0);
    p.Gamma = j.value("Gamma", 1.0);
    p.Ts = j.value("Ts", 1.0);
    p.Tb = j.value("Tb", 1.0);
}

inline void to_json(json& j, const QuadratureConfig& q) {
    j = json{{"omega_min", q.omega_min},
             {"omega_max", q.omega_max},
             {"rel_tol", q.rel_tol},
             {"abs_tol", q.abs_tol},
             {"max_intervals", q.max_intervals},
             {"domain", q.domain == SpectralDomain::Positive ? "positive" : "full-line"}};
}
inline void from_json(const json& j, QuadratureConfig& q) {
    q.omega_min = j.value("omega_min", 0.0);
    q.omega_max = j.value("omega_max", 0.0);
    q.rel_tol = j.value("rel_tol", 1e-9);
    q.abs_tol = j.value("abs_tol", 1e-12);
    q.max_intervals = j.value("max_intervals", std::size_t{4000});
    const std::string d = j.value("domain", "positive");
    if (d == "positive") q.domain = SpectralDomain::Positive;
    else if (d == "full-line") q.domain = SpectralDomain::FullLine;
    else throw InvalidParameter("quad.domain", "unknown domain '" + d + "'");
}

inline void to_json(json& j, const IntegratorConfig& c) {
    j = json{{"rel_tol", c.rel_tol}, {"abs_tol", c.abs_tol}, {"max_step", c.max_step}};
}
inline void from_json(const json& j, IntegratorConfig& c) {
    c.rel_tol = j.value("rel_tol", 1e-10);
    c.abs_tol = j.value("abs_tol", 1e-12);
    c.max_step = j.value("max_step", 0.0);
}

inline void to_json(json& j, const PulseSchedule& s) {
    switch (s.kind) {
        case PulseSchedule::Kind::None: j = json{{"kind", "none"}}; break;
        case PulseSchedule::Kind::LeoTrain:
            j = json{{"kind", "leo"}, {"omega1", s.omega1}, {"t_c", s.t_c}, {"t_p", s.t_p}};
            break;
        case PulseSchedule::Kind::Kick:
            j = json{{"kind", "kick"}, {"omega_k", s.omega_k}, {"t0", s.t0}, {"dt", s.dt}};
            break;
    }
}
inline void from_json(const json& j, PulseSchedule& s) {
    const std::string k = j.value("kind", "none");
    if (k == "none") {
        s = PulseSchedule::none();
    } else if (k == "leo") {
        s = PulseSchedule::leo_train(j.value("omega1", 0.0), j.value("t_c", 0.0),
                                     j.value("t_p", 0.0));
    } else if (k == "kick") {
        s = PulseSchedule::kick(j.value("omega_k", 0.0), j.value("t0", 0.0),
                                j.value("dt", 0.0));
    } else {
        throw InvalidParameter("pulse.kind", "unknown kind '" + k + "'");
    }
}

inline void to_json(json& j, const ExperimentConfig& c) {
    j = json{{"experiment", to_string(c.experiment)},
             {"model", c.model},
             {"quad", c.resolved_quad()},
             {"integ", c.integ},
             {"pulse", c.pulse},
             {"grid", json{{"t_max", c.grid.t_max}, {"n_samples", c.grid.n_samples}}},
             {"oracle", c.oracle == OracleChoice::None       ? "none"
                        : c.oracle == OracleChoice::Local    ? "local"
                        : c.oracle == OracleChoice::Discrete ? "discrete"
                                                             : "both"},
             {"output", json{{"path", c.output_path},
                             {"format", c.format == OutputFormat::Csv ? "csv" : "json"}}},
             {"tol", c.tol},
             {"seed", c.seed}};
    if (c.sweep)
        j["sweep"] = json{{"parameter", c.sweep->parameter},
                          {"values", c.sweep->values},
                          {"observable", c.sweep->observable}};
    if (c.experiment == ExperimentKind::Mpemba)
        j["mpemba"] = json{{"Ts_hot", c.mpemba.Ts_hot},
                           {"Ts_cold", c.mpemba.Ts_cold},
                           {"kick_on", c.mpemba.kick_on},
                           {"band", c.mpemba.band}};
}

inline void from_json(const json& j, ExperimentConfig& c) {
    c.experiment = experiment_kind_from(j.value("experiment", "evolve"));
    if (j.contains("model")) c.model = j.at("model").get<ModelParams>();
    if (j.contains("quad")) c.quad = j.at("quad").get<QuadratureConfig>();
    if (j.contains("integ")) c.integ = j.at("integ").get<IntegratorConfig>();
    if (j.contains("pulse")) c.pulse = j.at("pulse").get<PulseSchedule>();
    if (j.contains("grid")) {
        c.grid.t_max = j.at("grid").value("t_max", 20.0);
        c.grid.n_samples = j.at("grid").value("n_samples", std::size_t{801});
    }
    if (j.contains("sweep")) {
        SweepSpec s;
        s.parameter = j.at("sweep").value("parameter", "");
        s.values = j.at("sweep").value("values", std::vector<double>{});
        s.observable = j.at("sweep").value("observable", "trajectory");
        c.sweep = s;
    }
    if (j.contains("mpemba")) {
        c.mpemba.Ts_hot = j.at("mpemba").value("Ts_hot", 8.0);
        c.mpemba.Ts_cold = j.at("mpemba").value("Ts_cold", 6.0);
        c.mpemba.kick_on = j.at("mpemba").value("kick_on", "cold");
        c.mpemba.band = j.at("mpemba").value("band", 0.02);
    }
    const std::string oc = j.value("oracle", "none");
    c.oracle = oc == "none"       ? OracleChoice::None
               : oc == "local"    ? OracleChoice::Local
               : oc == "discrete" ? OracleChoice::Discrete
               : oc == "both"     ? OracleChoice::Both
                                  : throw InvalidParameter("oracle", "unknown '" + oc + "'");
    if (j.contains("output")) {
        c.output_path = j.at("output").value("path", "");
        const std::string f = j.at("output").value("format", "csv");
        if (f == "csv") c.format = OutputFormat::Csv;
        else if (f == "json") c.format = OutputFormat::Json;
        else throw InvalidParameter("output.format", "unknown '" + f + "'");
    }
    c.tol = j.value("tol", 1e-9);
    c.seed = j.value("seed", std::uint64_t{0});
}

// ---- Validation ---------------------------------------------------------

struct Diagnostic {
    std::string field;
    std::string value;
    std::string rule;
};

inline std::vector<Diagnostic> validate(const ExperimentConfig& c) {
    std::vector<Diagnostic> out;
    for (const auto& m : c.model.validate()) out.push_back({"model", "", m});
    for (const auto& m : c.pulse.validate(c.model.omega0)) out.push_back({"pulse", "", m});
    if (!(c.grid.t_max > 0))
        out.push_back({"grid.t_max", std::to_string(c.grid.t_max), "must be positive"});
    if (c.grid.n_samples < 2)
        out.push_back({"grid.n_samples", std::to_string(c.grid.n_samples), "need at least 2"});
    if (c.experiment == ExperimentKind::Sweep) {
        if (!c.sweep) {
            out.push_back({"sweep", "", "sweep experiment requires a sweep_axis"});
        } else {
            static const std::vector<std::string> known = {
                "gamma", "Gamma", "Ts", "Tb", "omega0", "Omega", "h",
                "omega1", "t_c", "t_p", "omega_k", "t0", "dt"};
            bool ok = false;
            for (const auto& k : known) ok = ok || (k == c.sweep->parameter);
            if (!ok)
                out.push_back({"sweep.parameter", c.sweep->parameter,
                               "not a ModelParams or PulseSchedule field"});
            if (c.sweep->values.empty())
                out.push_back({"sweep.values", "", "must be non-empty"});
            if (c.sweep->observable != "trajectory" && c.sweep->observable != "steady")
                out.push_back({"sweep.observable", c.sweep->observable,
                               "must be 'trajectory' or 'steady'"});
        }
    }
    if (c.experiment == ExperimentKind::Mpemba) {
        if (!(c.mpemba.Ts_hot > c.mpemba.Ts_cold))
            out.push_back({"mpemba.Ts_hot", std::to_string(c.mpemba.Ts_hot),
                           "must exceed Ts_cold"});
        if (!(c.mpemba.band > 0 && c.mpemba.band < 1))
            out.push_back({"mpemba.band", std::to_string(c.mpemba.band), "must lie in (0,1)"});
        if (c.mpemba.kick_on != "hot" && c.mpemba.kick_on != "cold")
            out.push_back({"mpemba.kick_on", c.mpemba.kick_on, "must be 'hot' or 'cold'"});
    }
    const auto q = c.resolved_quad();
    if (!(q.omega_min > 0) || !(q.omega_max > q.omega_min))
        out.push_back({"quad", "", "need 0 < omega_min < omega_max"});
    return out;
}

// ---- Results ------------------------------------------------------------

struct Series {
    std::string name;
    Provenance provenance = Provenance::Analytic;
    std::vector<double> values;
};

struct ResultRecord {
    json config_echo;
    std::vector<double> axis;     ///< omega0 * t for trajectories, sweep value otherwise
    std::string axis_name = "omega0_t";
    std::vector<Series> series;
    json report;  ///< experiment-specific scalars (metrics, mpemba report)
    double wall_time_s = 0;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const ResultRecord& r, bool with_timestamp = true) {
    const std::string cfg = r.config_echo.dump();
    os << "# meta: tool=lorosc version=" << kVersion << "\n";
    os << "# meta: config-hash=" << std::hex << fnv1a(cfg) << std::dec << "\n";
    os << "# meta: config=" << cfg << "\n";
    if (!r.report.is_null()) os << "# meta: report=" << r.report.dump() << "\n";
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        os << "# meta: generated-at="
           << std::chrono::duration_cast<std::chrono::seconds>(now).count() << "\n";
    }
    os << r.axis_name;
    for (const auto& s : r.series) os << "," << s.name;
    os << "\n";
    for (std::size_t i = 0; i < r.axis.size(); ++i) {
        os << format_g17(r.axis[i]);
        for (const auto& s : r.series) os << "," << format_g17(s.values[i]);
        os << "\n";
    }
}

inline json result_to_json(const ResultRecord& r) {
    json out;
    out["meta"] = json{{"tool", "lorosc"},
                       {"version", kVersion},
                       {"config-hash", fnv1a(r.config_echo.dump())},
                       {"config", r.config_echo}};
    out[r.axis_name] = r.axis;
    json ser = json::object();
    json prov = json::object();
    for (const auto& s : r.series) {
        ser[s.name] = s.values;
        prov[s.name] = to_string(s.provenance);
    }
    out["series"] = ser;
    out["provenance"] = prov;
    if (!r.report.is_null()) out["report"] = r.report;
    return out;
}

// ---- Runners ------------------------------------------------------------

namespace detail_exp {

inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

inline void apply_sweep_value(ExperimentConfig& c, const std::string& param, double v) {
    if (param == "gamma") c.model.gamma = v;
    else if (param == "Gamma") c.model.Gamma = v;
    else if (param == "Ts") c.model.Ts = v;
    else if (param == "Tb") c.model.Tb = v;
    else if (param == "omega0") c.model.omega0 = v;
    else if (param == "Omega") c.model.Omega = v;
    else if (param == "h") c.model.omega0 = v * c.model.Omega;
    else if (param == "omega1") c.pulse.omega1 = v;
    else if (param == "t_c") c.pulse.t_c = v;
    else if (param == "t_p") c.pulse.t_p = v;
    else if (param == "omega_k") c.pulse.omega_k = v;
    else if (param == "t0") c.pulse.t0 = v;
    else if (param == "dt") c.pulse.dt = v;
    else throw InvalidParameter("sweep.parameter", "unknown parameter '" + param + "'");
}

inline std::string short_num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace detail_exp

ResultRecord run(const ExperimentConfig& config);

namespace detail_exp {

inline ResultRecord run_evolve(const ExperimentConfig& c) {
    ResultRecord r;
    const auto q = c.resolved_quad();
    const auto grid = linspace(0.0, c.grid.t_max, c.grid.n_samples);
    const auto traj = evolve_with_control(c.model, c.pulse, grid, q);
    r.axis.reserve(traj.times.size());
    for (double t : traj.times) r.axis.push_back(c.model.omega0 * t);
    r.series.push_back({"N_analytic", Provenance::Analytic, traj.aen});

    if (c.oracle == OracleChoice::Local || c.oracle == OracleChoice::Both) {
        const auto A = evolve_local_ode(c.model, c.pulse, traj.times, c.integ);
        Series s{"A_abs_local_ode", Provenance::LocalOdeOracle, {}};
        s.values.reserve(A.size());
        for (const auto& a : A) s.values.push_back(std::abs(a));
        r.series.push_back(std::move(s));
        ChainedSolution Ac(c.model, c.pulse, traj.times.back());
        Series sa{"A_abs_analytic", Provenance::Analytic, {}};
        for (double t : traj.times) sa.values.push_back(std::abs(Ac.value(t)));
        r.series.push_back(std::move(sa));
    }
    if (c.oracle == OracleChoice::Discrete || c.oracle == OracleChoice::Both) {
        const auto modes = discretize_bath(c.model, kDefaultBathModes, kDefaultBathHalfwidth);
        const auto states = evolve_discrete_bath(c.model, modes, c.pulse, traj.times, c.integ);
        const auto tr2 = aen_from_discrete(states, c.model, modes, traj.times);
        r.series.push_back({"N_discrete_bath", Provenance::DiscreteBathOracle, tr2.aen});
    }
    return r;
}

inline ResultRecord run_steady(const ExperimentConfig& c) {
    ResultRecord r;
    const auto q = c.resolved_quad();
    r.axis_name = "gamma";
    r.axis = {c.model.gamma};
    r.series.push_back({"N_steady", Provenance::Analytic, {steady_state_aen(c.model, q)}});
    r.series.push_back(
        {"N_markovian_limit", Provenance::Analytic, {markovian_limit_aen(c.model)}});
    r.series.push_back(
        {"N_gamma_zero_law", Provenance::Analytic, {gamma_zero_limit_aen(c.model)}});
    return r;
}

inline ResultRecord run_sweep(const ExperimentConfig& c) {
    if (!c.sweep) throw InvalidParameter("sweep", "missing sweep_axis");
    ResultRecord r;
    const auto& sw = *c.sweep;

    if (sw.observable == "steady") {
        std::vector<std::future<double>> futs;
        for (double v : sw.values)
            futs.push_back(std::async(std::launch::async, [&, v] {
                ExperimentConfig cc = c;
                apply_sweep_value(cc, sw.parameter, v);
                return steady_state_aen(cc.model, cc.resolved_quad());
            }));
        r.axis_name = sw.parameter;
        Series s{"N_steady", Provenance::Analytic, {}};
        for (std::size_t i = 0; i < sw.values.size(); ++i) {
            r.axis.push_back(sw.values[i]);
            s.values.push_back(futs[i].get());
        }
        r.series.push_back(std::move(s));
        return r;
    }

    // trajectories are sampled on the shared raw grid so swept series stay
    // column-aligned; the chained evaluator is exact across pulse edges
    const auto grid = linspace(0.0, c.grid.t_max, c.grid.n_samples);
    std::vector<std::future<Trajectory>> futs;
    for (double v : sw.values)
        futs.push_back(std::async(std::launch::async, [&, v] {
            ExperimentConfig cc = c;
            apply_sweep_value(cc, sw.parameter, v);
            auto diag = cc.pulse.validate(cc.model.omega0);
            if (!diag.empty()) throw InvalidParameter("PulseSchedule", diag.front());
            TrajectoryEngine eng(cc.model, cc.pulse, grid.back(), cc.resolved_quad());
            return eng.trajectory(grid);
        }));
    for (double t : grid) r.axis.push_back(c.model.omega0 * t);
    for (std::size_t i = 0; i < sw.values.size(); ++i) {
        Trajectory tr = futs[i].get();
        r.series.push_back({"N[" + sw.parameter + "=" + short_num(sw.values[i]) + "]",
                            Provenance::Analytic, tr.aen});
    }
    return r;
}

inline ResultRecord run_pulse(const ExperimentConfig& c) {
    ResultRecord r;
    const auto q = c.resolved_quad();
    const auto grid = linspace(0.0, c.grid.t_max, c.grid.n_samples);
    auto controlled = evolve_with_control(c.model, c.pulse, grid, q);

    // evaluate the uncontrolled reference on the controlled grid (it contains
    // the pulse edges)
    r.axis.reserve(controlled.times.size());
    for (double t : controlled.times) r.axis.push_back(c.model.omega0 * t);
    TrajectoryEngine bare_eng(c.model, PulseSchedule::none(), controlled.times.back(), q);
    Series sb{"N_uncontrolled", Provenance::Analytic, {}};
    for (double t : controlled.times) sb.values.push_back(bare_eng.aen(t));
    r.series.push_back({"N_controlled", Provenance::Analytic, controlled.aen});
    r.series.push_back(std::move(sb));

    double dev_c = 0, dev_u = 0;
    for (std::size_t i = 0; i < controlled.times.size(); ++i) {
        dev_c = std::max(dev_c, std::abs(controlled.aen[i] - controlled.aen.front()));
        dev_u = std::max(dev_u, std::abs(r.series[1].values[i] - r.series[1].values.front()));
    }
    r.report = json{{"sup_deviation_controlled", dev_c},
                    {"sup_deviation_uncontrolled", dev_u},
                    {"suppression_factor", dev_u / std::max(dev_c, 1e-300)}};
    return r;
}

inline ResultRecord run_mpemba(const ExperimentConfig& c) {
    ResultRecord r;
    const auto q = c.resolved_quad();
    const auto grid = linspace(0.0, c.grid.t_max, c.grid.n_samples);
    ModelParams hot = c.model;
    hot.Ts = c.mpemba.Ts_hot;
    ModelParams cold = c.model;
    cold.Ts = c.mpemba.Ts_cold;
    const auto rep = mpemba_experiment(hot, cold, c.pulse, c.mpemba.kick_on == "hot", grid,
                                       c.mpemba.band, q);
    r.axis.reserve(rep.hot.times.size());
    for (double t : rep.hot.times) r.axis.push_back(c.model.omega0 * t);
    r.series.push_back({"N_hot", Provenance::Analytic, rep.hot.aen});
    r.series.push_back({"N_cold", Provenance::Analytic, rep.cold.aen});
    json jr;
    jr["steady_value"] = rep.steady_value;
    jr["hot_relaxation"] = rep.hot_relaxation ? json(*rep.hot_relaxation) : json();
    jr["cold_relaxation"] = rep.cold_relaxation ? json(*rep.cold_relaxation) : json();
    jr["crossing_times"] = rep.crossing_times;
    jr["effect_detected"] = rep.effect_detected;
    jr["reason"] = rep.reason;
    r.report = jr;
    return r;
}

}  // namespace detail_exp

inline ResultRecord run(const ExperimentConfig& config) {
    const auto diags = validate(config);
    if (!diags.empty()) {
        std::string msg = "invalid config:";
        for (const auto& d : diags) msg += " [" + d.field + "] " + d.rule + ";";
        throw InvalidParameter("config", msg);
    }
    const auto t0 = std::chrono::steady_clock::now();
    ResultRecord r;
    switch (config.experiment) {
        case ExperimentKind::Evolve: r = detail_exp::run_evolve(config); break;
        case ExperimentKind::Steady: r = detail_exp::run_steady(config); break;
        case ExperimentKind::Sweep: r = detail_exp::run_sweep(config); break;
        case ExperimentKind::Pulse: r = detail_exp::run_pulse(config); break;
        case ExperimentKind::Mpemba: r = detail_exp::run_mpemba(config); break;
    }
    json echo;
    to_json(echo, config);
    r.config_echo = echo;
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ---- Presets ------------------------------------------------------------

inline ExperimentConfig preset(const std::string& name) {
    ExperimentConfig c;
    c.model = ModelParams::resonant(1.0, 1.0, 1.0, 5.0, 1.0);
    auto sweep = [&](const std::string& param, std::vector<double> vals,
                     const std::string& obs = "trajectory") {
        c.experiment = ExperimentKind::Sweep;
        c.sweep = SweepSpec{param, std::move(vals), obs};
    };
    if (name == "fig1a") {
        c.model.Ts = 10;
        sweep("Tb", {0.5, 1.0, 2.0, 4.0});
    } else if (name == "fig1b") {
        c.model.Tb = 1;
        sweep("Ts", {1.0, 5.0, 10.0});
    } else if (name == "fig1c") {
        c.model.Ts = 5;
        c.model.Tb = 1;
        sweep("gamma", {0.2, 1.0, 5.0});
    } else if (name == "fig1d") {
        c.model.Ts = 5;
        c.model.Tb = 1;
        sweep("Gamma", {0.5, 1.0, 2.0});
    } else if (name == "fig2a") {
        c.model.Ts = 10;
        c.model.Tb = 1;
        c.grid.t_max = 50;
        sweep("gamma", {0.01, 0.1, 1.0});
    } else if (name == "fig2b") {
        c.model.Ts = 10;
        c.model.Tb = 1;
        c.model.gamma = 2.0;
        c.grid.t_max = 50;
        c.experiment = ExperimentKind::Evolve;
    } else if (name == "fig3") {
        c.model.Tb = 1;
        std::vector<double> g;
        for (double x = 0.01; x <= 100.01; x *= 1.4678) g.push_back(x);
        sweep("gamma", g, "steady");
    } else if (name == "fig5a" || name == "fig5b") {
        c.model = ModelParams::make(1.0, 1.2, name == "fig5a" ? 0.01 : 1.0, 1.0, 5.0, 1.0);
        c.grid.t_max = 50;
        sweep("Omega", {0.8, 1.0, 1.2, 1.5});
    } else if (name == "fig5c") {
        c.model = ModelParams::make(1.0, 1.2, 1.0, 1.0, 5.0, 1.0);
        sweep("Omega", detail_exp::linspace(0.5, 2.0, 16), "steady");
    } else if (name == "fig6a") {
        c.model = ModelParams::make(1.0, 1.2, 0.1, 1.0, 5.0, 1.0);
        c.grid.t_max = 50;
        sweep("gamma", {0.01, 0.1, 1.0, 10.0});
    } else if (name == "fig6b") {
        c.model = ModelParams::make(1.0, 1.2, 1.0, 1.0, 5.0, 1.0);
        std::vector<double> g;
        for (double x = 0.01; x <= 100.01; x *= 1.4678) g.push_back(x);
        sweep("gamma", g, "steady");
    } else if (name == "fig8a" || name == "fig8b" || name == "fig8c") {
        c.model = ModelParams::make(1.0, 1.2, 0.1, 1.0, 5.0, 1.0);
        c.experiment = ExperimentKind::Pulse;
        c.grid.t_max = 20;
        c.pulse = PulseSchedule::leo_train(8.0, 0.5, 0.4);
        if (name == "fig8a") sweep("t_p", {0.4, 0.3, 0.2, 0.1});
        if (name == "fig8b") {
            c.pulse.t_p = 0.3;
            sweep("omega1", {2.0, 4.0, 8.0});
        }
        if (name == "fig8c") {
            c.pulse.t_p = 0.4;
            sweep("gamma", {0.02, 0.1, 0.5});
        }
        if (c.sweep) c.experiment = ExperimentKind::Sweep;
    } else if (name == "fig9a" || name == "fig9b") {
        c.experiment = ExperimentKind::Mpemba;
        c.model = ModelParams::resonant(1.0, name == "fig9a" ? 1.0 : 100.0, 1.0, 8.0, 1.0);
        c.mpemba = MpembaSpec{8.0, 6.0, "cold", 0.02};
        c.pulse = PulseSchedule::kick(5.0, 1.0, 0.3);
        c.grid.t_max = 50;
        c.grid.n_samples = 2001;
    } else if (name == "fig9c") {
        c.experiment = ExperimentKind::Mpemba;
        c.model = ModelParams::resonant(1.0, 0.01, 1.0, 8.0, 1.0);
        c.mpemba = MpembaSpec{8.0, 6.0, "hot", 0.1};
        const double t_f = 5000.0, t0k = 0.02 * t_f;
        const auto end = suggest_kick_end(c.model, 3.0, t0k, 50.0);
        c.pulse = PulseSchedule::kick(3.0, t0k, end ? *end - t0k : 1.0);
        c.grid.t_max = t_f;
        c.grid.n_samples = 2501;
    } else {
        throw InvalidParameter("preset", "unknown preset '" + name + "'");
    }
    return c;
}

inline std::vector<std::string> preset_names() {
    return {"fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig3",
            "fig5a", "fig5b", "fig5c", "fig6a", "fig6b", "fig8a", "fig8b",
            "fig8c", "fig9a", "fig9b", "fig9c"};
}

}  // namespace lorosc
