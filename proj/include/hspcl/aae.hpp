#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "hspcl/hsi_data.hpp"
#include "hspcl/networks.hpp"
#include "hspcl/vae.hpp"

namespace hspcl::aae {

/// The reconstruction phase uses the same objective as the VAE.
using vae::recon_loss;

/// Critic loss: mean(critic_fake) - mean(critic_real).
torch::Tensor wgan_d_loss(const torch::Tensor& critic_fake, const torch::Tensor& critic_real);

/// Generator loss: -mean(critic_fake).
torch::Tensor wgan_g_loss(const torch::Tensor& critic_fake);

/// Clamps every critic parameter into [-clip, clip].
void clip_weights(torch::nn::Module& critic, double clip);

struct TrainConfig {
  int64_t epochs = 20;
  int64_t batch_size = 128;
  double recon_lr = 1e-3;
  double recon_weight_decay = 5e-4;
  double generator_lr = 1e-4;
  double discriminator_lr = 5e-5;
  double clip = 0.01;
  int64_t critic_steps = 1;
  uint64_t seed = 0;
};

struct Bundle {
  nets::AaeEncoder encoder{nullptr};
  nets::ConvDecoder decoder{nullptr};
  nets::Critic critic{nullptr};

  void eval();
};

struct EpochRecord {
  int64_t epoch = 0;
  double loss = 0.0;  // mean reconstruction loss
  double d_loss = 0.0;
  double g_loss = 0.0;
  double latent_mean = 0.0;
  double latent_std = 0.0;
};

struct TrainResult {
  Bundle bundle;
  std::vector<EpochRecord> log;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

/// Per batch: a reconstruction step (Adam on encoder and decoder), then
/// `critic_steps` critic updates against N(0, I) samples with weight
/// clipping, then one generator update of the encoder.
TrainResult train_aae(const hsi::PatchSet& patches, const nets::BackboneSpec& spec,
                      const TrainConfig& config, const EpochCallback& on_epoch = {});

struct Encoded {
  torch::Tensor latent;  // N x 128
  torch::Tensor pooled;  // N x 1024
};

Encoded aae_encode(nets::AaeEncoder& encoder, const hsi::PatchSet& patches,
                   int64_t batch_size = 128);

/// N x 1024 pooled backbone features, in patch order.
torch::Tensor extract_aae_features(nets::AaeEncoder& encoder, const hsi::PatchSet& patches,
                                   int64_t batch_size = 128);

}  // namespace hspcl::aae
