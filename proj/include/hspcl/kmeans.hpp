#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <vector>

namespace hspcl::clustering {

struct KMeansResult {
  torch::Tensor centroids;    // k x d, float32 cluster means
  torch::Tensor assignments;  // N, int64
  /// Sum of squared distances to the assigned centroid after each Lloyd
  /// iteration; non-increasing.
  std::vector<double> objective;
  int64_t iterations = 0;
  bool converged = false;
};

/// Lloyd's algorithm from a k-means++ start. Empty clusters are refilled
/// with the point of the largest cluster that lies farthest from its
/// centroid. Stops when no assignment changes or after `max_iterations`.
KMeansResult kmeans(const torch::Tensor& points, int64_t k, uint64_t seed,
                    int64_t max_iterations = 100);

/// Sum of squared Euclidean distances, accumulated in double precision.
double kmeans_objective(const torch::Tensor& points, const torch::Tensor& centroids,
                        const torch::Tensor& assignments);

}  // namespace hspcl::clustering
