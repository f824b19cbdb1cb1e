#include "vsgraph/model_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "vsgraph/errors.hpp"

namespace vsgraph {
namespace {

constexpr std::array<char, 8> kMagic = {'V', 'S', 'G', 'M', 'O', 'D', 'E', 'L'};

class Writer {
 public:
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void i64(std::int64_t v) { put(static_cast<std::uint64_t>(v), 8); }
  void f64(double v) { put(std::bit_cast<std::uint64_t>(v), 8); }
  void raw(const char* data, std::size_t n) { bytes_.insert(bytes_.end(), data, data + n); }
  [[nodiscard]] const std::vector<char>& bytes() const noexcept { return bytes_; }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
  }
  std::vector<char> bytes_;
};

class Reader {
 public:
  Reader(std::vector<char> bytes, std::string name) : bytes_(std::move(bytes)), name_(std::move(name)) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::int64_t i64() { return static_cast<std::int64_t>(get(8)); }
  double f64() { return std::bit_cast<double>(get(8)); }
  void raw(char* out, std::size_t n) {
    need(n);
    std::memcpy(out, bytes_.data() + pos_, n);
    pos_ += n;
  }
  [[nodiscard]] std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw FormatVersionError(name_ + ": truncated model file");
  }
  std::uint64_t get(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_++])) << (8 * i);
    }
    return v;
  }

  std::vector<char> bytes_;
  std::string name_;
  std::size_t pos_ = 0;
};

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& model_path) {
  auto p = model_path;
  p += ".json";
  return p;
}

void save_model(const std::filesystem::path& path, const SavedModel& model,
                const nlohmann::json& metadata) {
  const bool is_vsgraph = model.kind == ModelKind::kVsGraph;
  const std::size_t dim = is_vsgraph ? model.vsgraph.dim() : model.graphhd.dim;
  const std::size_t classes =
      is_vsgraph ? model.vsgraph.num_classes() : model.graphhd.num_classes();
  if (model.raw_labels.size() != classes) {
    throw std::invalid_argument("save_model: raw label count does not match class count");
  }

  Writer w;
  w.raw(kMagic.data(), kMagic.size());
  w.u32(kModelFormatVersion);
  w.u32(is_vsgraph ? 0u : 1u);
  w.u64(dim);
  w.u64(classes);
  w.f64(model.config.alpha);
  w.u64(model.config.hops);
  w.u64(model.config.layers);
  w.u64(model.config.seed.master_seed);
  w.u64(model.config.seed.stream_id);
  w.u32(model.config.aggregation == AggregationMode::kMax ? 0u : 1u);
  w.u32(0);
  for (const auto r : model.raw_labels) w.i64(r);
  if (is_vsgraph) {
    for (Eigen::Index c = 0; c < model.vsgraph.prototypes.rows(); ++c) {
      for (Eigen::Index d = 0; d < model.vsgraph.prototypes.cols(); ++d) {
        w.f64(model.vsgraph.prototypes(c, d));
      }
    }
  } else {
    for (const auto& p : model.graphhd.prototypes) {
      for (const auto word : p.words()) w.u64(word);
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
  if (!out) throw IoError(path.string(), "write failed");

  nlohmann::json side = {
      {"format", "vsgraph-model"},
      {"format_version", kModelFormatVersion},
      {"model", to_string(model.kind)},
      {"dim", dim},
      {"num_classes", classes},
      {"alpha", model.config.alpha},
      {"hops", model.config.hops},
      {"layers", model.config.layers},
      {"master_seed", model.config.seed.master_seed},
      {"stream_id", model.config.seed.stream_id},
      {"aggregation", to_string(model.config.aggregation)},
      {"raw_labels", model.raw_labels},
      {"metadata", metadata},
  };
  std::ofstream meta(sidecar_path(path));
  if (!meta) throw IoError(sidecar_path(path).string(), "cannot open for writing");
  meta << side.dump(2) << '\n';
}

SavedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open model file");
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Reader r(std::move(bytes), path.string());

  std::array<char, 8> magic{};
  r.raw(magic.data(), magic.size());
  if (magic != kMagic) throw FormatVersionError(path.string() + ": not a vsgraph model file");
  const std::uint32_t version = r.u32();
  if (version != kModelFormatVersion) {
    throw FormatVersionError(path.string() + ": unsupported model format version " +
                             std::to_string(version) + " (expected " +
                             std::to_string(kModelFormatVersion) + ")");
  }
  const std::uint32_t kind = r.u32();
  if (kind > 1) throw FormatVersionError(path.string() + ": unknown model kind " + std::to_string(kind));

  SavedModel m;
  m.kind = kind == 0 ? ModelKind::kVsGraph : ModelKind::kGraphHD;
  const std::uint64_t dim = r.u64();
  const std::uint64_t classes = r.u64();
  if (dim == 0 || classes == 0) throw FormatVersionError(path.string() + ": empty model");
  m.config.dim = dim;
  m.config.alpha = r.f64();
  m.config.hops = r.u64();
  m.config.layers = r.u64();
  m.config.seed.master_seed = r.u64();
  m.config.seed.stream_id = r.u64();
  m.config.aggregation = r.u32() == 0 ? AggregationMode::kMax : AggregationMode::kBinarizeOr;
  r.u32();

  const std::uint64_t words = BinaryHypervector::words_for(dim);
  const std::uint64_t payload = classes * 8 + classes * (kind == 0 ? dim * 8 : words * 8);
  if (r.remaining() != payload) {
    throw FormatVersionError(path.string() + ": payload size does not match header");
  }
  for (std::uint64_t c = 0; c < classes; ++c) m.raw_labels.push_back(r.i64());

  if (m.kind == ModelKind::kVsGraph) {
    m.vsgraph.config = m.config;
    m.vsgraph.prototypes.resize(static_cast<Eigen::Index>(classes), static_cast<Eigen::Index>(dim));
    for (Eigen::Index c = 0; c < m.vsgraph.prototypes.rows(); ++c) {
      for (Eigen::Index d = 0; d < m.vsgraph.prototypes.cols(); ++d) {
        m.vsgraph.prototypes(c, d) = r.f64();
      }
    }
  } else {
    m.graphhd.dim = dim;
    m.graphhd.seed = m.config.seed;
    for (std::uint64_t c = 0; c < classes; ++c) {
      std::vector<std::uint64_t> packed(words);
      for (auto& w : packed) w = r.u64();
      m.graphhd.prototypes.push_back(BinaryHypervector::from_words(dim, std::move(packed)));
    }
  }
  return m;
}

}  // namespace vsgraph
