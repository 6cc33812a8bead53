#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hspcl/networks.hpp"

namespace hspcl::contrast {

struct Config {
  int64_t negatives = 640;  // r
  double temperature = 0.01;
  std::vector<int64_t> clusters{1000, 1500, 2500};
  /// Explicit cluster list; required when `clusters` breaks k <= N/4.
  std::vector<int64_t> clusters_override;
  double momentum = 0.999;
  int64_t warmup_epochs = 30;
  int64_t epochs = 200;
  int64_t batch_size = 128;
  double lr = 0.003;
  double weight_decay = 0.001;
  double sgd_momentum = 0.9;
  std::vector<int64_t> lr_milestones{120, 160};
  double lr_gamma = 0.1;
  double alpha = 10.0;
  double concentration_floor = 1e-3;
  int64_t kmeans_iterations = 100;
  uint64_t seed = 0;

  void validate() const;
  /// Cluster counts to use for `samples` training rows; throws unless every
  /// k satisfies k <= samples / 4.
  std::vector<int64_t> effective_clusters(int64_t samples) const;
  /// Learning rate in effect during 1-based `epoch`.
  double lr_at(int64_t epoch) const;
};

/// mean_i -log(exp(pos_i) / (exp(pos_i) + sum_j exp(neg_ij))), with logits
/// already divided by their temperature.
torch::Tensor nce_from_logits(const torch::Tensor& positive, const torch::Tensor& negative);

/// InfoNCE over unit vectors: v (N x d), positives (N x d), negatives (N x r x d).
torch::Tensor info_nce(const torch::Tensor& v, const torch::Tensor& positives,
                       const torch::Tensor& negatives, double temperature);

/// Unclamped sum_z ||v_z - c|| / (Z * ln(Z + alpha)).
double raw_concentration(const torch::Tensor& members, const torch::Tensor& centroid, double alpha);

/// raw_concentration, floored at `floor`.
double concentration(const torch::Tensor& members, const torch::Tensor& centroid, double alpha,
                     double floor = 1e-3);

/// Clamps into [max(floor, 0.05 * median), 5 * median].
void clamp_concentrations(std::vector<double>& phi, double floor);

struct PrototypeLevel {
  torch::Tensor centroids;      // k x d, unit rows
  torch::Tensor concentration;  // k, >= floor
  torch::Tensor assignments;    // N, int64
  int64_t k() const { return centroids.size(0); }
};

struct PrototypeSet {
  std::vector<PrototypeLevel> levels;
};

/// E-step on momentum embeddings: k-means for each granularity, per-cluster
/// concentration, then centroid normalisation.
PrototypeSet estimate_prototypes(const torch::Tensor& embeddings, const std::vector<int64_t>& ks,
                                 double alpha, double floor, uint64_t seed,
                                 int64_t kmeans_iterations = 100);

/// Up to r cluster ids per row drawn uniformly without replacement from the
/// clusters other than that row's own; B x min(r, k - 1).
torch::Tensor sample_negative_prototypes(const torch::Tensor& own_clusters, int64_t k, int64_t r,
                                         std::mt19937_64& rng);

/// The prototype term, averaged over samples and granularities.
/// `sample_ids` index rows of the prototype assignments; `negative_ids`
/// holds one B x r' tensor of cluster ids per level.
torch::Tensor proto_loss(const torch::Tensor& v, const PrototypeSet& prototypes,
                         const torch::Tensor& sample_ids,
                         const std::vector<torch::Tensor>& negative_ids);

/// info_nce + proto_loss.
torch::Tensor proto_nce(const torch::Tensor& v, const torch::Tensor& positives,
                        const torch::Tensor& negatives, double temperature,
                        const PrototypeSet& prototypes, const torch::Tensor& sample_ids,
                        const std::vector<torch::Tensor>& negative_ids);

/// momentum <- m * momentum + (1 - m) * online, elementwise per tensor.
void momentum_update(const std::vector<torch::Tensor>& online, std::vector<torch::Tensor>& momentum,
                     double m);
void momentum_update(const torch::nn::Module& online, torch::nn::Module& momentum, double m);

struct EpochRecord {
  int64_t epoch = 0;
  std::string phase;  // "warmup" or "proto"
  double loss = 0.0;
  double lr = 0.0;
  std::vector<int64_t> ks;
  std::vector<double> phi_min, phi_median, phi_max;
};

struct TrainResult {
  nets::ContrastEncoder encoder{nullptr};
  nets::ContrastEncoder momentum_encoder{nullptr};
  std::vector<EpochRecord> log;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

/// Optional probes fired at the E-step/M-step boundaries.
struct TrainHooks {
  EpochCallback on_epoch;
  std::function<void(int64_t epoch, const PrototypeSet&)> on_prototypes;
};

/// EM training: AAE rows feed the online encoder, VAE rows the momentum
/// encoder. Warmup epochs use InfoNCE alone; later epochs re-cluster the
/// momentum embeddings of every VAE row first and minimise ProtoNCE.
TrainResult train_contrastnet(const torch::Tensor& aae_features, const torch::Tensor& vae_features,
                              const Config& config, const TrainHooks& hooks = {});

/// N x 128 pre-head contrast features, unit rows, in input order.
torch::Tensor extract_contrast_features(nets::ContrastEncoder& encoder,
                                        const torch::Tensor& features, int64_t batch_size = 128);

}  // namespace hspcl::contrast
