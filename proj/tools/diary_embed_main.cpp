#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "diaryembed/harness.hpp"

using diaryembed::harness::ExperimentConfig;

namespace {

void add_common_flags(CLI::App* cmd, ExperimentConfig& config) {
    cmd->add_option("--radius", config.radius, "sweep all pairs in the ball of this radius");
    cmd->add_option("--samples", config.samples, "number of sampled pairs");
    cmd->add_option("--length", config.length, "target element length for sampling");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--mode", config.mode, "paper | custom")
        ->check(CLI::IsMember({"paper", "custom"}));
    cmd->add_option("--kappa", config.kappa, "chapter size in custom mode");
    cmd->add_option("--min-distance", config.min_distance, "pair distance floor (classify)");
    cmd->add_option("--out", config.out, "record file path");
    cmd->add_option("--format", config.format, "jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_option("--bfs-cap", config.bfs_cap, "ball radius cap");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diary-embed: bounded-alphabet recodings of tree embeddings, demonstrated on "
                 "the hexagonal Coxeter group"};
    app.require_subcommand(0, 1);

    ExperimentConfig config;
    std::string input;
    std::string config_file;
    app.add_option("--config", config_file, "flat key=value config file (alternative to flags)");

    auto* reduce = app.add_subcommand("reduce", "reduce a generator word");
    reduce->add_option("word", input, "whitespace-separated generators")->required();

    auto* normal = app.add_subcommand("normal-form", "canonical or side-left form");
    normal->add_option("word", input)->required();
    normal->add_option("--side", config.side, "a | b: side-left representation");

    auto* ball = app.add_subcommand("ball", "enumerate a metric ball");
    add_common_flags(ball, config);

    auto* diary = app.add_subcommand("diary", "greedy diary chapters of a sentence");
    diary->add_option("sentence", input, "words joined by '|'")->required();
    diary->add_option("--kappa", config.kappa, "letters recorded per day");
    diary->add_option("--diary", config.diary_descriptor,
                      "diary constructor, e.g. virgo(ltrunc:12;J=2;N=18;eps=1;kappa=32)");

    auto* embed = app.add_subcommand("embed", "factor sentences and diary images");
    embed->add_option("word", input)->required();
    embed->add_option("--mode", config.mode)->check(CLI::IsMember({"paper", "custom"}));
    embed->add_option("--kappa", config.kappa);
    embed->add_flag("--binary", config.binary_dump, "also print binary recodings");

    auto* isometry = app.add_subcommand("isometry", "check the factor map against the oracle");
    add_common_flags(isometry, config);

    auto* distort = app.add_subcommand("distort", "distortion sweep with records");
    add_common_flags(distort, config);

    auto* classify = app.add_subcommand("classify", "criteria census over far pairs");
    add_common_flags(classify, config);

    app.add_subcommand("selftest", "run the built-in checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_file.empty()) {
            config = diaryembed::harness::load_config_file(config_file, config);
        }
        if (!app.get_subcommands().empty()) {
            config.command = app.get_subcommands().front()->get_name();
            if (!input.empty()) config.args.push_back(input);
        }
        if (config.command.empty()) {
            std::cerr << "config error: no command given (subcommand or config file)\n";
            return 2;
        }
        config = diaryembed::harness::apply_env(config);
        return diaryembed::harness::run(config, std::cout);
    } catch (const diaryembed::harness::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
