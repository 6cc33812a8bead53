#pragma once

#include <torch/torch.h>

#include <cstdint>

namespace hspcl::eval {

struct EmbeddingOptions {
  double perplexity = 30.0;
  int64_t iterations = 750;
  double learning_rate = 200.0;
  double early_exaggeration = 12.0;
  int64_t exaggeration_iterations = 100;
  /// Inputs wider than this are first projected onto their top principal axes.
  int64_t pca_dims = 50;
  uint64_t seed = 0;
};

/// Exact t-SNE to two dimensions; N x 2 float64, deterministic per seed.
torch::Tensor embed_2d(const torch::Tensor& features, const EmbeddingOptions& options = {});

}  // namespace hspcl::eval
