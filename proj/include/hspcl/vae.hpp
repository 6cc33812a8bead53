#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "hspcl/hsi_data.hpp"
#include "hspcl/networks.hpp"

namespace hspcl::vae {

/// z = mu + eps * exp(log_var / 2).
torch::Tensor reparameterize(const torch::Tensor& mu, const torch::Tensor& log_var,
                             const torch::Tensor& eps);

/// 0.5 * sum over samples and latent dims of (mu^2 + sigma^2 - log sigma^2 - 1).
torch::Tensor kl_loss(const torch::Tensor& mu, const torch::Tensor& log_var);

/// Per-sample mean squared error over every non-batch cell, summed over the
/// batch. Shared by the VAE and AAE reconstruction phases.
torch::Tensor recon_loss(const torch::Tensor& input, const torch::Tensor& output);

struct TrainConfig {
  int64_t epochs = 30;
  int64_t batch_size = 128;
  double lr = 1e-3;
  double weight_decay = 5e-4;
  uint64_t seed = 0;
};

struct EpochRecord {
  int64_t epoch = 0;
  double loss = 0.0;   // mean per-batch total loss
  double kl = 0.0;
  double recon = 0.0;
};

struct TrainResult {
  nets::VaeEncoder encoder{nullptr};
  std::vector<EpochRecord> log;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

/// Trains encoder and decoder jointly (one Adam each) on KL + reconstruction.
/// Only the encoder is returned, in eval mode.
TrainResult train_vae(const hsi::PatchSet& patches, const nets::BackboneSpec& spec,
                      const TrainConfig& config, const EpochCallback& on_epoch = {});

/// N x 1024 pooled backbone features, in patch order.
torch::Tensor extract_vae_features(nets::VaeEncoder& encoder, const hsi::PatchSet& patches,
                                   int64_t batch_size = 128);

}  // namespace hspcl::vae
