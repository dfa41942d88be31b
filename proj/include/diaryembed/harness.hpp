#ifndef DIARYEMBED_HARNESS_HPP
#define DIARYEMBED_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diaryembed/embed.hpp"

namespace diaryembed::harness {

/*
 * One experiment invocation. Every run is a pure function of the config: the
 * same config and seed reproduce byte-identical record files.
 *
 * Exit statuses: 0 on success, 1 when an invariant violation is detected,
 * 2 on configuration errors.
 */
struct ExperimentConfig {
    std::string command;             // reduce | normal-form | ball | embed | diary |
                                     // isometry | distort | classify | selftest
    std::vector<std::string> args;   // positional inputs (group words, sentences)

    std::int64_t radius = -1;        // exhaustive sweeps over bfs_ball(radius)
    std::int64_t samples = -1;       // sampled sweeps
    std::int64_t length = 8;         // element length for sampled sweeps
    std::uint64_t seed = 1;
    std::string mode = "custom";     // paper | custom
    std::int64_t kappa = 32;         // custom-mode chapter size
    std::int64_t min_distance = 12;  // classify: pair distance floor
    std::string out;                 // record file path ("" = no records)
    std::string format = "jsonl";    // jsonl | csv
    std::string side;                // normal-form: "" | a | b
    std::string diary_descriptor;    // diary: constructor text ("" = alice(kappa))
    bool binary_dump = false;        // embed: also print binary recodings
    std::int64_t bfs_cap = hex::kDefaultBfsCap;

    EmbeddingConfig embedding() const;
};

// Applies DIARY_EMBED_BFS_CAP when set.
ExperimentConfig apply_env(ExperimentConfig config);

// Parses a flat key=value config file ('#' comments); keys mirror the flags.
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run(const ExperimentConfig& config, std::ostream& out);

}  // namespace diaryembed::harness

#endif
