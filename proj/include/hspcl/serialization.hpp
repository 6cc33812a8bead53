#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

namespace hspcl::io {

/// Writes through `<path>.tmp` and renames over `path` once the writer returns.
void write_file_atomic(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& writer);

void write_text_atomic(const std::filesystem::path& path, std::string_view text);

std::string read_text(const std::filesystem::path& path);

nlohmann::json read_json(const std::filesystem::path& path);

/// FNV-1a, 64 bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

// ---------------------------------------------------------------------------
// Feature archive: "FEAT", u32 version, u64 N, u64 D, N*D little-endian
// float32, then u32 length + JSON metadata.

inline constexpr uint32_t kFeatureArchiveVersion = 1;

struct FeatureMetadata {
  std::string stage;
  uint64_t seed = 0;
  std::string config_hash;
};

struct FeatureArchive {
  torch::Tensor features;  // N x D float32
  FeatureMetadata meta;
};

void write_feature_archive(const std::filesystem::path& path, const torch::Tensor& features,
                           const FeatureMetadata& meta);
FeatureArchive read_feature_archive(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Checkpoint: "HSCK", u32 version, u64 header length, JSON header, then the
// tensor payloads back to back in header order.

inline constexpr uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  std::string arch_id;
  nlohmann::json descriptor = nlohmann::json::object();
  std::string config_hash;
  std::map<std::string, torch::Tensor> tensors;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Every parameter and buffer of `module`, keyed by its dotted name.
std::map<std::string, torch::Tensor> module_state(const torch::nn::Module& module);

/// Copies a state map into `module`; names and shapes must match exactly.
void load_module_state(torch::nn::Module& module,
                       const std::map<std::string, torch::Tensor>& state);

}  // namespace hspcl::io
