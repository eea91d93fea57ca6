#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperzeno/model.hpp"

namespace hz::cli {

using nlohmann::json;

// Malformed input; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Schema: g, chi, Gamma1, Gamma2, Lambda1, Lambda2, Omega1, Omega2 as numbers,
// "k": {mode: number}, "amp": {mode: {"mag": number, "phase": number}}.
// Missing entries default to zero; unknown keys are rejected.
SystemParams params_from_json(const json& j);
json params_to_json(const SystemParams& p);

SystemParams load_params(const std::filesystem::path& file);
json load_json(const std::filesystem::path& file);

// "Gamma1=0.5", "k.S=0.1", "amp.S.mag=0" or "amp.S.phase=1.2".
void apply_override(SystemParams& p, std::string_view assignment);

}  // namespace hz::cli
