#pragma once

/// Dispatch of parsed scenarios to the library: each command produces a
/// line-oriented `key = value` report with exact rationals and an exit
/// code. Identical invocations produce byte-identical output.

#include "cliffpar/scenario.hpp"

#include <cstdint>
#include <string>

namespace cliffpar {

/// Defaults a scenario can override through its bindings; seeds and
/// bounds come only from here.
struct RunConfig {
    Rat a = Rat(-1);
    Rat b = Rat(-1);
    std::uint64_t seed = 0;
    int trials = 100;
    int height = 3;
    int probe_bound = 10;
};

/// Exit codes: 0 when the property holds or the query is answered, 1
/// when the property fails or a witness is found, 2 on usage, parse, or
/// domain errors.
struct RunResult {
    int exit_code;
    std::string output;
};

/// Runs the scenario's command. Domain errors surface as an `error` key
/// with exit code 2; the report always opens with the seed.
RunResult run_scenario(const Scenario& scenario, const RunConfig& config);

}  // namespace cliffpar
