// radloc — range-free sensor localization experiments.
//
//   radloc sweep    --config cfg.json --param num_anchors --range 24:36:4 --out results/
//   radloc snapshot --config cfg.json --trial 0 --out trial0.svg
//   radloc verify

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "radloc/commands.hpp"
#include "radloc/verify.hpp"

namespace {

bool parse_range(const std::string& text, radloc::SweepSpec& spec) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        return false;
    }
    try {
        spec.start = std::stoi(text.substr(0, first));
        spec.stop = std::stoi(text.substr(first + 1, second - first - 1));
        spec.step = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::vector<std::pair<std::string, std::string>> parse_overrides(const std::vector<std::string>& raw) {
    std::vector<std::pair<std::string, std::string>> overrides;
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--set", "expected key=value, got '" + item + "'");
        }
        overrides.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return overrides;
}

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Range-free WSN localization: radical-line vs centroid experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string range_text;
    std::vector<std::string> set_args;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();

    radloc::RunManifest manifest;

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV results");
    sweep->add_option("--config", config_path, "JSON scenario config (defaults when omitted)");
    sweep->add_option("--param", manifest.sweep.param, "num_anchors or num_sensors")->required();
    sweep->add_option("--range", range_text, "sweep range start:stop:step")->required();
    sweep->add_option("--out", manifest.out_dir, "output directory")->required();
    auto* sweep_seed = sweep->add_option("--seed", seed, "master seed override");
    sweep->add_option("--set", set_args, "config override key=value (repeatable)");
    sweep->add_option("--threads", threads, "worker threads for trials");

    int trial_index = 0;
    CLI::App* snapshot = app.add_subcommand("snapshot", "render one trial as SVG");
    snapshot->add_option("--config", config_path, "JSON scenario config (defaults when omitted)");
    snapshot->add_option("--trial", trial_index, "trial index")->required();
    snapshot->add_option("--out", manifest.out_file, "output SVG file")->required();
    auto* snap_seed = snapshot->add_option("--seed", seed, "master seed override");
    snapshot->add_option("--set", set_args, "config override key=value (repeatable)");

    radloc::VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run the built-in oracle suite");
    verify->add_flag("--inject-fault", verify_opts.inject_fault)->group(""); // hidden self-test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return radloc::kExitValidation;
    }

    try {
        manifest.config_path = config_path;
        manifest.overrides = parse_overrides(set_args);
        manifest.threads = threads;

        if (sweep->parsed()) {
            if (!parse_range(range_text, manifest.sweep)) {
                std::cerr << "error: --range expects start:stop:step\n";
                return radloc::kExitValidation;
            }
            if (sweep_seed->count() > 0) {
                manifest.seed = seed;
            }
            return radloc::cmd_sweep(manifest, std::cout);
        }
        if (snapshot->parsed()) {
            if (snap_seed->count() > 0) {
                manifest.seed = seed;
            }
            manifest.emit_svg = true;
            return radloc::cmd_snapshot(manifest, trial_index, std::cout);
        }
        if (verify->parsed()) {
            return radloc::run_verify(std::cout, verify_opts) ? radloc::kExitOk
                                                              : radloc::kExitVerifyFailed;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return radloc::kExitValidation;
    }
    return radloc::kExitValidation;
}
