#pragma once

// Binary model container plus a JSON sidecar. Layout (all little-endian):
//
//   offset  size  field
//   0       8     magic "VSGMODEL"
//   8       4     u32 format version (kModelFormatVersion)
//   12      4     u32 model kind (0 = vsgraph, 1 = graphhd)
//   16      8     u64 dimension D
//   24      8     u64 class count C
//   32      8     f64 alpha
//   40      8     u64 diffusion hops K
//   48      8     u64 message-passing layers L
//   56      8     u64 master seed
//   64      8     u64 basis stream id
//   72      4     u32 aggregation mode (0 = max, 1 = binarize-or)
//   76      4     u32 reserved, zero
//   80      8*C   i64 raw label of each class
//   ...           vsgraph: C rows of D f64 prototype components
//                 graphhd: C rows of ceil(D/64) u64 packed words
//
// The sidecar `<file>.json` repeats the header in readable form together with
// any caller-supplied metadata. It is never read back.

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "vsgraph/classifier.hpp"
#include "vsgraph/graphhd.hpp"
#include "vsgraph/model_kind.hpp"

namespace vsgraph {

inline constexpr std::uint32_t kModelFormatVersion = 1;

struct SavedModel {
  ModelKind kind = ModelKind::kVsGraph;
  /// Encoder settings; for GraphHD only dim and seed are meaningful.
  EncoderConfig config;
  std::vector<std::int64_t> raw_labels;
  PrototypeModel<double> vsgraph;
  GraphHDModel graphhd;
};

void save_model(const std::filesystem::path& path, const SavedModel& model,
                const nlohmann::json& metadata = nlohmann::json::object());

/// Throws IoError when unreadable, FormatVersionError on a bad magic, an
/// unknown version or a truncated/oversized payload.
SavedModel load_model(const std::filesystem::path& path);

std::filesystem::path sidecar_path(const std::filesystem::path& model_path);

}  // namespace vsgraph
