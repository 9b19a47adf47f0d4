#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace radloc {

// Exit codes shared by the command layer and the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitVerifyFailed = 3;

struct SweepSpec {
    std::string param; // "num_anchors" or "num_sensors"
    int start = 0;
    int stop = 0;
    int step = 0;
};

struct RunManifest {
    std::string config_path; // empty: all defaults
    std::string out_dir;     // sweep output directory
    std::string out_file;    // snapshot output file
    SweepSpec sweep;
    bool emit_csv = true;
    bool emit_svg = false;
    std::vector<std::pair<std::string, std::string>> overrides; // --set key=value
    std::optional<std::uint64_t> seed;                          // --seed
    unsigned threads = 1;
};

// Runs the sweep described by the manifest and writes
// <out_dir>/sweep_<param>.csv. Returns an exit code.
int cmd_sweep(const RunManifest& manifest, std::ostream& log);

// Renders one trial of the manifest's scenario to <out_file> as SVG.
int cmd_snapshot(const RunManifest& manifest, int trial_index, std::ostream& log);

} // namespace radloc
