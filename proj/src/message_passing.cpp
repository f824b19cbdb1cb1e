#include "vsgraph/message_passing.hpp"

namespace vsgraph {

std::string to_string(AggregationMode mode) {
  return mode == AggregationMode::kMax ? "max" : "binarize-or";
}

AggregationMode parse_aggregation_mode(const std::string& text) {
  if (text == "max") return AggregationMode::kMax;
  if (text == "binarize-or") return AggregationMode::kBinarizeOr;
  throw std::invalid_argument("unknown aggregation mode '" + text +
                              "' (expected max or binarize-or)");
}

void EncoderConfig::validate() const {
  if (dim == 0) throw InvalidDimension("encoder dimension must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace vsgraph
