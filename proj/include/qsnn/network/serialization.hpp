#pragma once

#include <filesystem>

#include <json.hpp>

#include "qsnn/network/network.hpp"

namespace qsnn {

using Json = nlohmann::ordered_json;

Json to_json(const ExcNeuronParams& p);
Json to_json(const PhaseNeuronParams& p);
Json to_json(const FinalLayerParams& p);
Json to_json(const NeuronParams& p);
Json to_json(const NeuronSpec& spec);
Json to_json(const NetworkSpec& spec);

/// Strict parsers: unknown fields and wrong types raise Error(kValidation).
/// Omitted parameter fields take their defaults.
ExcNeuronParams exc_params_from_json(const Json& j);
PhaseNeuronParams phase_params_from_json(const Json& j);
FinalLayerParams final_params_from_json(const Json& j, FinalVariant variant);
NeuronSpec neuron_spec_from_json(const Json& j);

/// Corrections are not part of the document; they are derived from the
/// schedule (only the last writer of a target applies the output phase).
NetworkSpec network_spec_from_json(const Json& j);

NetworkSpec load_network_spec(const std::filesystem::path& path);

}  // namespace qsnn
