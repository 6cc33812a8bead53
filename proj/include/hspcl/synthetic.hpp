#pragma once

#include <cstdint>
#include <utility>

#include "hspcl/hsi_data.hpp"

namespace hspcl::hsi {

/// Piecewise-constant scene: Voronoi regions, each carrying one class whose
/// pixels are a smooth class signature plus Gaussian noise.
struct SyntheticSceneOptions {
  int64_t height = 64;
  int64_t width = 64;
  int64_t bands = 20;
  int64_t classes = 4;
  int64_t regions = 8;
  double noise = 0.35;
  /// Fraction of pixels, drawn at random, left unlabeled.
  double unlabeled_fraction = 0.0;
  uint64_t seed = 7;
};

std::pair<HyperspectralCube, LabelMap> make_synthetic_scene(const SyntheticSceneOptions& options);

}  // namespace hspcl::hsi
