#include "radloc/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "radloc/config.hpp"
#include "radloc/csv.hpp"
#include "radloc/errors.hpp"
#include "radloc/svg.hpp"

namespace radloc {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

ScenarioConfig load_config(const RunManifest& manifest) {
    ScenarioConfig cfg =
        manifest.config_path.empty() ? ScenarioConfig{} : parse_config(read_file(manifest.config_path));
    for (const auto& [key, value] : manifest.overrides) {
        apply_override(cfg, key, value);
    }
    if (manifest.seed) {
        cfg.master_seed = *manifest.seed;
    }
    return cfg;
}

std::vector<int> sweep_values(const SweepSpec& spec) {
    if (spec.param != "num_anchors" && spec.param != "num_sensors") {
        throw ValidationError("param", "sweep param must be num_anchors or num_sensors");
    }
    if (spec.step <= 0) {
        throw ValidationError("range", "sweep step must be > 0");
    }
    if (spec.start > spec.stop) {
        throw ValidationError("range", "sweep start must be <= stop");
    }
    std::vector<int> values;
    for (int v = spec.start; v <= spec.stop; v += spec.step) {
        values.push_back(v);
    }
    return values;
}

} // namespace

int cmd_sweep(const RunManifest& manifest, std::ostream& log) {
    try {
        const ScenarioConfig cfg = load_config(manifest);
        const std::vector<int> values = sweep_values(manifest.sweep);
        const SweepParam param = manifest.sweep.param == "num_anchors" ? SweepParam::NumAnchors
                                                                       : SweepParam::NumSensors;
        const auto results = run_scenario(cfg, param, values, manifest.threads);

        if (manifest.emit_csv) {
            std::error_code ec;
            fs::create_directories(manifest.out_dir, ec);
            const fs::path out = fs::path(manifest.out_dir) / ("sweep_" + manifest.sweep.param + ".csv");
            write_file(out, sweep_csv(manifest.sweep.param, results));
            log << "wrote " << out.string() << "\n";
        }
        for (const ScenarioResult& r : results) {
            log << manifest.sweep.param << "=" << r.sweep_value << "  e_ca=" << format_number(r.errors.e_ca)
                << "  e_rla=" << format_number(r.errors.e_rla)
                << "  localized=" << format_number(r.errors.localized_fraction) << "\n";
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        log << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        log << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_snapshot(const RunManifest& manifest, int trial_index, std::ostream& log) {
    try {
        if (trial_index < 0) {
            throw ValidationError("trial", "trial index must be >= 0");
        }
        const ScenarioConfig cfg = load_config(manifest);
        const Deployment dep = generate_deployment(cfg, trial_index);
        const TrialResult trial = evaluate_deployment(dep, cfg);

        const fs::path out(manifest.out_file);
        if (out.has_parent_path()) {
            std::error_code ec;
            fs::create_directories(out.parent_path(), ec);
        }
        write_file(out, snapshot_svg(dep, trial, cfg));
        log << "wrote " << out.string() << "  (RLA error=" << format_number(trial_error(trial, cfg.r_max, Method::RLA))
            << ", CA error=" << format_number(trial_error(trial, cfg.r_max, Method::CA)) << ")\n";
        return kExitOk;
    } catch (const ValidationError& e) {
        log << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        log << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

} // namespace radloc
