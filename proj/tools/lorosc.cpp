// lorosc command-line front end.
//
//   lorosc evolve|steady|sweep|pulse|mpemba [flags]
//   lorosc validate --config cfg.json
//   lorosc preset fig1c --out fig1c.csv
//
// Exit codes: 0 success, 2 validation failure, 3 numerical non-convergence.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lorosc/experiment.hpp"

namespace {

using namespace lorosc;

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::string oracle;
    double tol = 0;
    std::int64_t seed = -1;
    std::vector<std::string> sets;  // key=value overrides
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file");
    cmd->add_option("--out", f.out_path, "output path ('-' for stdout)");
    cmd->add_option("--format", f.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--oracle", f.oracle, "none|local|discrete|both")
        ->check(CLI::IsMember({"none", "local", "discrete", "both"}));
    cmd->add_option("--tol", f.tol, "classification tolerance (relative)");
    cmd->add_option("--seed", f.seed, "reserved; pipeline is deterministic");
    cmd->add_option("--set", f.sets, "config override key=value (e.g. model.gamma=0.5)")
        ->take_all();
}

json load_config_json(const CommonFlags& f) {
    json j = json::object();
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) throw InvalidParameter("config", "cannot open " + f.config_path);
        in >> j;
    }
    return j;
}

void apply_overrides(json& j, const CommonFlags& f) {
    for (const auto& kv : f.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("--set", "expected key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        json* node = &j;
        std::size_t pos = 0;
        while (true) {
            const auto dot = key.find('.', pos);
            const std::string part = key.substr(pos, dot - pos);
            if (dot == std::string::npos) {
                try {
                    (*node)[part] = json::parse(val);
                } catch (const json::parse_error&) {
                    (*node)[part] = val;  // bare string
                }
                break;
            }
            node = &(*node)[part];
            pos = dot + 1;
        }
    }
    if (!f.format.empty()) j["output"]["format"] = f.format;
    if (!f.out_path.empty()) j["output"]["path"] = f.out_path;
    if (!f.oracle.empty()) j["oracle"] = f.oracle;
    if (f.tol > 0) j["tol"] = f.tol;
    if (f.seed >= 0) j["seed"] = static_cast<std::uint64_t>(f.seed);
}

int emit(const ResultRecord& rec, const ExperimentConfig& cfg) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.output_path.empty() && cfg.output_path != "-") {
        file.open(cfg.output_path);
        if (!file) {
            std::cerr << "error: cannot open output path " << cfg.output_path << "\n";
            return 2;
        }
        os = &file;
    }
    if (cfg.format == OutputFormat::Csv)
        write_csv(*os, rec);
    else
        *os << result_to_json(rec).dump(2) << "\n";
    return 0;
}

int run_and_emit(json j) {
    ExperimentConfig cfg;
    from_json(j, cfg);
    const auto diags = validate(cfg);
    if (!diags.empty()) {
        for (const auto& d : diags)
            std::cerr << "invalid: [" << d.field << "]"
                      << (d.value.empty() ? "" : " = " + d.value) << ": " << d.rule << "\n";
        return 2;
    }
    try {
        const auto rec = run(cfg);
        return emit(rec, cfg);
    } catch (const QuadratureError& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const IntegrationError& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lorosc: exact open dynamics of an oscillator in a Lorentzian bath"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lorosc::kVersion);

    CommonFlags flags;
    std::string preset_name;

    auto* c_evolve = app.add_subcommand("evolve", "AEN trajectory N(t)");
    auto* c_steady = app.add_subcommand("steady", "steady-state AEN");
    auto* c_sweep = app.add_subcommand("sweep", "parameter sweep");
    auto* c_pulse = app.add_subcommand("pulse", "controlled trajectory plus metrics");
    auto* c_mpemba = app.add_subcommand("mpemba", "two-sample kick experiment");
    auto* c_validate = app.add_subcommand("validate", "check a config without running");
    auto* c_preset = app.add_subcommand("preset", "run a named figure preset");
    c_preset->add_option("name", preset_name, "preset name (fig1a..fig9c)")->required();

    for (auto* cmd : {c_evolve, c_steady, c_sweep, c_pulse, c_mpemba, c_validate, c_preset})
        add_common(cmd, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_validate)) {
            json j = load_config_json(flags);
            apply_overrides(j, flags);
            ExperimentConfig cfg;
            from_json(j, cfg);
            const auto diags = lorosc::validate(cfg);
            for (const auto& d : diags)
                std::cout << "[" << d.field << "]"
                          << (d.value.empty() ? "" : " = " + d.value) << ": " << d.rule << "\n";
            if (diags.empty()) std::cout << "ok\n";
            return diags.empty() ? 0 : 2;
        }

        json j;
        if (app.got_subcommand(c_preset)) {
            ExperimentConfig cfg = lorosc::preset(preset_name);
            to_json(j, cfg);
        } else {
            j = load_config_json(flags);
            if (app.got_subcommand(c_evolve)) j["experiment"] = "evolve";
            if (app.got_subcommand(c_steady)) j["experiment"] = "steady";
            if (app.got_subcommand(c_sweep)) j["experiment"] = "sweep";
            if (app.got_subcommand(c_pulse)) j["experiment"] = "pulse";
            if (app.got_subcommand(c_mpemba)) j["experiment"] = "mpemba";
        }
        apply_overrides(j, flags);
        return run_and_emit(j);
    } catch (const lorosc::InvalidParameter& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
