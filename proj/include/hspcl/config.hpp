#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hspcl/aae.hpp"
#include "hspcl/contrast.hpp"
#include "hspcl/hsi_data.hpp"
#include "hspcl/networks.hpp"
#include "hspcl/svm.hpp"
#include "hspcl/tsne.hpp"
#include "hspcl/vae.hpp"
#include "json.hpp"

namespace hspcl {

enum class Stage {
  Convert,
  Pca,
  Patches,
  TrainVae,
  TrainAae,
  Extract,
  TrainContrast,
  Classify,
  Report,
  Embed,
};

std::string to_string(Stage stage);
Stage parse_stage(const std::string& text);
const std::vector<Stage>& all_stages();

struct DatasetConfig {
  std::string name = "dataset";
  std::filesystem::path cube;
  std::filesystem::path labels;
};

struct PreprocessConfig {
  int64_t pca_k = 30;
  int64_t window = 27;
  hsi::PatchScope scope = hsi::PatchScope::Labeled;
  bool standardize = true;
};

struct SplitConfig {
  double fraction = 0.1;
  uint64_t seed = 0;
};

struct NetworkConfig {
  std::array<int64_t, 3> depth_kernels{7, 5, 3};
  int64_t extract_batch_size = 128;
};

struct EmbedConfig {
  std::string features = "contrast";
  /// 0 keeps every labeled row; otherwise a seeded subsample of this size.
  int64_t max_points = 0;
  eval::EmbeddingOptions options;
};

/// Every run constant. Defaults reproduce the reference settings, so a
/// minimal config only names the dataset files.
struct ExperimentConfig {
  DatasetConfig dataset;
  std::filesystem::path output_dir;
  PreprocessConfig preprocess;
  SplitConfig split;
  NetworkConfig network;
  vae::TrainConfig vae;
  aae::TrainConfig aae;
  contrast::Config contrast;
  eval::SvmConfig svm;
  EmbedConfig embed;

  /// Fully merged document (defaults + file + overrides) the struct was read from.
  nlohmann::json document;

  nets::BackboneSpec backbone() const;
  void validate() const;

  /// Hash of the config sections that influence `stage` and everything
  /// upstream of it.
  std::string stage_hash(Stage stage) const;
};

nlohmann::json default_config_document();

/// Applies `key.path=value` (value parsed as JSON, else taken as a string).
void apply_override(nlohmann::json& document, const std::string& assignment);

/// Reads the struct from a merged document; unknown keys are rejected.
ExperimentConfig config_from_document(const nlohmann::json& document,
                                      const std::filesystem::path& base_dir = {});

/// Loads a config file, layering it over the defaults and then applying the
/// overrides. Relative paths resolve against the file's directory; the
/// HSPCL_OUTPUT_ROOT environment variable replaces output_dir.
ExperimentConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {});

}  // namespace hspcl
