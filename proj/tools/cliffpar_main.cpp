#include "cliffpar/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

/// Flag values melt into scenario text appended after file and inline
/// text, so the ordinary override order applies: defaults, file, --expr,
/// positional words, flags.
struct Options {
    std::string algebra;
    std::string par1;
    std::string par2;
    std::string expr;
    std::vector<std::string> words;
    cliffpar::RunConfig config;
};

std::string flag_bindings(const Options& options) {
    std::string out;
    if (!options.algebra.empty()) {
        const auto comma = options.algebra.find(',');
        if (comma == std::string::npos)
            throw std::domain_error("--algebra expects a,b");
        out += " a=" + options.algebra.substr(0, comma) + " b=" + options.algebra.substr(comma + 1);
    }
    if (!options.par1.empty()) out += " par1=" + options.par1;
    if (!options.par2.empty()) out += " par2=" + options.par2;
    return out;
}

std::string assemble_text(const Options& options) {
    std::string text;
    auto words = options.words;
    if (!words.empty()) {
        std::ifstream file(words.front());
        if (file.good()) {
            std::ostringstream content;
            content << file.rdbuf();
            text += content.str();
            words.erase(words.begin());
        }
    }
    text += "\n" + options.expr;
    for (const std::string& word : words) text += " " + word;
    text += flag_bindings(options);
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact computations in the projective space of a rational quaternion division "
        "algebra: Clifford parallelisms, their blends, and partition combinatorics."};
    Options options;
    app.add_option("--algebra", options.algebra, "Algebra parameters as a,b (default -1,-1)");
    app.add_option("--seed", options.config.seed, "Seed for scans (default 0)");
    app.add_option("--trials", options.config.trials, "Trials for scans (default 100)");
    app.add_option("--height", options.config.height, "Height bound for scans (default 3)");
    app.add_option("--probe-bound", options.config.probe_bound,
                   "Generator height for descriptor comparison (default 10)");
    app.add_option("--par1", options.par1, "First parallelism descriptor");
    app.add_option("--par2", options.par2, "Second parallelism descriptor");
    app.add_option("--expr", options.expr, "Inline scenario text");
    app.add_option("words", options.words,
                   "Scenario file path, command words, and name=literal bindings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const cliffpar::Scenario scenario = cliffpar::parse_scenario(assemble_text(options));
        const cliffpar::RunResult result = cliffpar::run_scenario(scenario, options.config);
        std::cout << result.output;
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cout << "error = " << e.what() << "\n";
        return 2;
    }
}
