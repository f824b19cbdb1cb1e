#pragma once

#include <string>

namespace vsgraph {

enum class ModelKind { kVsGraph, kGraphHD };

std::string to_string(ModelKind kind);
/// Accepts "vsgraph" or "graphhd"; throws std::invalid_argument otherwise.
ModelKind parse_model_kind(const std::string& text);

}  // namespace vsgraph
