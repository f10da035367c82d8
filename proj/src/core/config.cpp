#include "core/config.hpp"

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

namespace tendex {

using nlohmann::json;

const char* boundary_name(BoundaryPolicy boundary) {
    return boundary == BoundaryPolicy::Free ? "free" : "periodic";
}

const char* criterion_name(Criterion criterion) {
    return criterion == Criterion::Stc ? "stc" : "maxep";
}

BoundaryPolicy boundary_from_name(const std::string& name) {
    if (name == "free") return BoundaryPolicy::Free;
    if (name == "periodic") return BoundaryPolicy::Periodic;
    throw Error(Status::Parse, "ParseError: unknown boundary \"" + name + "\"");
}

Criterion criterion_from_name(const std::string& name) {
    if (name == "stc") return Criterion::Stc;
    if (name == "maxep") return Criterion::MaxEp;
    throw Error(Status::Parse, "ParseError: unknown criterion \"" + name + "\"");
}

std::string run_config_to_json(const RunConfig& config) {
    json j;
    j["boundary"] = boundary_name(config.boundary);
    j["criterion"] = criterion_name(config.criterion);
    j["p_star"] = config.p_star;
    j["n_lags"] = config.n_lags;
    j["hp_lambda"] = config.hp_lambda;
    j["seed"] = config.seed;
    j["max_bin"] = config.max_bin;
    j["output_dir"] = config.output_dir;
    return j.dump(2);
}

RunConfig run_config_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(Status::Parse, std::string("ParseError: bad config JSON: ") + e.what());
    }
    if (!j.is_object())
        throw Error(Status::Parse, "ParseError: config must be a JSON object");

    RunConfig config;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "boundary")
                config.boundary = boundary_from_name(value.get<std::string>());
            else if (key == "criterion")
                config.criterion = criterion_from_name(value.get<std::string>());
            else if (key == "p_star")
                config.p_star = value.get<double>();
            else if (key == "n_lags")
                config.n_lags = value.get<int>();
            else if (key == "hp_lambda")
                config.hp_lambda = value.get<double>();
            else if (key == "seed")
                config.seed = value.get<std::uint64_t>();
            else if (key == "max_bin")
                config.max_bin = value.get<std::size_t>();
            else if (key == "output_dir")
                config.output_dir = value.get<std::string>();
            else
                throw Error(Status::Parse, "ParseError: unknown config key \"" + key + "\"");
        } catch (const json::exception& e) {
            throw Error(Status::Parse,
                        "ParseError: bad value for config key \"" + key + "\": " + e.what());
        }
    }
    if (!(config.p_star > 0.0 && config.p_star < 1.0))
        throw Error(Status::Parse, "ParseError: p_star must lie in (0, 1)");
    if (config.n_lags < 0)
        throw Error(Status::Parse, "ParseError: n_lags must be >= 0");
    if (!(config.hp_lambda >= 0.0))
        throw Error(Status::Parse, "ParseError: hp_lambda must be >= 0");
    return config;
}

} // namespace tendex
