#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace hspcl::hsi {

/// H x W x B reflectance cube, float32, band fastest-varying.
struct HyperspectralCube {
  std::string name;
  torch::Tensor data;

  int64_t height() const { return data.size(0); }
  int64_t width() const { return data.size(1); }
  int64_t bands() const { return data.size(2); }
};

/// H x W int32 ground truth; 0 is unlabeled, 1..C are classes.
struct LabelMap {
  torch::Tensor labels;

  int64_t height() const { return labels.size(0); }
  int64_t width() const { return labels.size(1); }
  int64_t num_classes() const;
  int64_t num_labeled() const;
};

/// Fields of the `<name>.json` side of an HSIC container.
struct ContainerHeader {
  int64_t height = 0;
  int64_t width = 0;
  int64_t bands = 1;
  std::string dtype = "float32";
  std::string byte_order = "little";
  std::string interleave = "bip";
  std::string name;
  nlohmann::json meta = nlohmann::json::object();

  nlohmann::json to_json() const;
  static ContainerHeader from_json(const nlohmann::json& j);
};

/// Accepts either the `.json` header path or the shared stem.
ContainerHeader read_container_header(const std::filesystem::path& path);

HyperspectralCube load_cube(const std::filesystem::path& path);
LabelMap load_labels(const std::filesystem::path& path);

void save_cube(const HyperspectralCube& cube, const std::filesystem::path& path,
               const nlohmann::json& meta = nlohmann::json::object());
void save_labels(const LabelMap& labels, const std::filesystem::path& path,
                 const nlohmann::json& meta = nlohmann::json::object());

/// Throws unless `labels` matches the cube footprint, has C >= 2, and every
/// class in 1..C is present.
void validate_labels(const LabelMap& labels, const HyperspectralCube& cube);

// ---------------------------------------------------------------------------
// PCA

struct PCAModel {
  torch::Tensor mean;                // B, float64
  torch::Tensor scale;               // B, float64 (per-band std, or ones)
  torch::Tensor components;          // K x B, float64, orthonormal rows
  torch::Tensor explained_variance;  // K, float64, non-increasing

  int64_t input_bands() const { return components.size(1); }
  int64_t output_bands() const { return components.size(0); }

  static PCAModel identity(int64_t bands);
};

/// Fits on every pixel of the cube. With `standardize`, bands are scaled to
/// unit variance before the covariance is formed.
PCAModel fit_pca(const HyperspectralCube& cube, int64_t k, bool standardize = true);

HyperspectralCube apply_pca(const PCAModel& model, const HyperspectralCube& cube);

// ---------------------------------------------------------------------------
// Patches

enum class PatchScope { Labeled, All };

PatchScope parse_scope(const std::string& text);
std::string to_string(PatchScope scope);

struct PatchSet {
  torch::Tensor patches;  // N x S x S x K, float32
  torch::Tensor coords;   // N x 2, int64 (row, col)
  torch::Tensor labels;   // N, int64; 0 = unlabeled
  int64_t window = 0;

  int64_t size() const { return patches.defined() ? patches.size(0) : 0; }
  int64_t bands() const { return patches.size(3); }

  /// Rows reordered as N x 1 x K x S x S, the layout the encoders consume.
  torch::Tensor network_input(const torch::Tensor& rows) const;
  torch::Tensor network_input() const;
};

/// Symmetric mirror index for padding: ... 1 0 | 0 1 2 ... n-1 | n-1 n-2 ...
int64_t mirror_index(int64_t i, int64_t n);

PatchSet extract_patches(const HyperspectralCube& reduced, const LabelMap& labels,
                         int64_t window, PatchScope scope);

/// Patches centred on explicit coordinates; labels are copied from `labels`.
PatchSet extract_patches_at(const HyperspectralCube& reduced, const LabelMap& labels,
                            int64_t window, const torch::Tensor& coords);

// ---------------------------------------------------------------------------
// Splits

struct SplitIndex {
  std::vector<int64_t> train;
  std::vector<int64_t> test;
  double fraction = 0.0;
  uint64_t seed = 0;
};

/// Per-class train count: max(1, floor(fraction * n_c + 0.5)).
int64_t stratified_train_count(double fraction, int64_t class_size);

/// Splits the labeled rows (label > 0) of `labels` class by class.
SplitIndex stratified_split(const torch::Tensor& labels, double fraction, uint64_t seed);
SplitIndex stratified_split(const PatchSet& patches, double fraction, uint64_t seed);

nlohmann::json to_json(const SplitIndex& split);
SplitIndex split_from_json(const nlohmann::json& j);

}  // namespace hspcl::hsi
