#pragma once

#include <cstdint>
#include <string>

#include "core/criteria.hpp"
#include "core/itd.hpp"

namespace tendex {

/// Resolved run configuration; serialized verbatim into every manifest so a
/// run can be reproduced from its outputs alone.
struct RunConfig {
    BoundaryPolicy boundary = BoundaryPolicy::Free;
    Criterion criterion = Criterion::Stc;
    double p_star = 0.05;
    int n_lags = 1;
    double hp_lambda = 1600.0;
    std::uint64_t seed = 0;
    std::size_t max_bin = 250;
    std::string output_dir;
};

std::string run_config_to_json(const RunConfig& config);

/// Parses a config object; unknown keys are rejected, missing keys keep their
/// defaults. Throws Parse errors with the offending key.
RunConfig run_config_from_json(const std::string& json_text);

const char* boundary_name(BoundaryPolicy boundary);
const char* criterion_name(Criterion criterion);
BoundaryPolicy boundary_from_name(const std::string& name);
Criterion criterion_from_name(const std::string& name);

} // namespace tendex
