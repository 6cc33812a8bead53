#pragma once

#include <torch/torch.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hspcl::nets {

/// Role of a saved network.
enum class ArchId { VaeEncoder, AaeEncoder, AaeDecoder, AaeDiscriminator, ContrastEncoder };

std::string to_string(ArchId id);
ArchId parse_arch_id(const std::string& text);

/// Geometry of the hybrid 3-D/2-D backbone shared by the VAE and AAE.
///
/// Three valid (unpadded) 3-D convolutions with depth kernels
/// `depth_kernels` and 3x3 spatial kernels, then a 3x3 2-D convolution over
/// the depth-folded channels, then adaptive average pooling to 4x4.
/// For 15 bands and a 27 px window the defaults give depths 9, 5, 3 and
/// spatial sizes 25, 23, 21, 19.
struct BackboneSpec {
  int64_t bands = 15;
  int64_t window = 27;
  std::array<int64_t, 3> depth_kernels{7, 5, 3};

  static constexpr int64_t kLatent = 128;
  static constexpr int64_t kPooledChannels = 64;
  static constexpr int64_t kPooledSide = 4;
  static constexpr int64_t kPooled = kPooledChannels * kPooledSide * kPooledSide;

  /// Depth after 3-D conv `i` (0-based).
  int64_t depth_after(int i) const;
  /// Spatial side after the i-th valid 3x3 convolution (i in 0..3).
  int64_t side_after(int i) const;

  void validate() const;

  nlohmann::json to_json() const;
  static BackboneSpec from_json(const nlohmann::json& j);
};

struct ShapeRecord {
  std::string layer;
  std::vector<int64_t> shape;  // without the batch dimension
};

using ShapeTrace = std::vector<ShapeRecord>;

/// Sequential container whose layers carry the type names of the reference
/// architecture tables. Layers pushed with an empty label (reshapes) are
/// applied but left out of shape traces.
class LayerStackImpl : public torch::nn::Module {
 public:
  LayerStackImpl();

  template <typename ModuleType>
  void push(std::string label, ModuleType layer) {
    labels_.push_back(std::move(label));
    layers_->push_back(std::move(layer));
  }

  torch::Tensor forward(torch::Tensor x);
  torch::Tensor forward(torch::Tensor x, ShapeTrace* trace);

 private:
  std::vector<std::string> labels_;
  torch::nn::Sequential layers_;
};
TORCH_MODULE(LayerStack);

/// Keeps the batch dimension and views the rest as `shape`.
class ReshapeImpl : public torch::nn::Module {
 public:
  explicit ReshapeImpl(std::vector<int64_t> shape) : shape_(std::move(shape)) {}
  torch::Tensor forward(torch::Tensor x);

 private:
  std::vector<int64_t> shape_;
};
TORCH_MODULE(Reshape);

/// Conv3d x3 -> fold depth -> Conv2d -> AdaptiveAvgPool2d(4); output N x 64 x 4 x 4.
class ConvBackboneImpl : public torch::nn::Module {
 public:
  explicit ConvBackboneImpl(const BackboneSpec& spec);
  torch::Tensor forward(torch::Tensor x, ShapeTrace* trace = nullptr);
  const BackboneSpec& spec() const { return spec_; }

 private:
  BackboneSpec spec_;
  LayerStack layers_{nullptr};
};
TORCH_MODULE(ConvBackbone);

struct VaeEncoding {
  torch::Tensor mu;       // N x 128
  torch::Tensor log_var;  // N x 128
  torch::Tensor pooled;   // N x 1024
};

class VaeEncoderImpl : public torch::nn::Module {
 public:
  explicit VaeEncoderImpl(const BackboneSpec& spec);
  VaeEncoding forward(torch::Tensor x, ShapeTrace* trace = nullptr);
  const BackboneSpec& spec() const { return backbone_->spec(); }

 private:
  ConvBackbone backbone_{nullptr};
  LayerStack hidden_{nullptr};
  torch::nn::Linear mu_{nullptr};
  torch::nn::Linear log_var_{nullptr};
};
TORCH_MODULE(VaeEncoder);

struct AaeEncoding {
  torch::Tensor latent;  // N x 128
  torch::Tensor pooled;  // N x 1024
};

class AaeEncoderImpl : public torch::nn::Module {
 public:
  explicit AaeEncoderImpl(const BackboneSpec& spec);
  AaeEncoding forward(torch::Tensor x, ShapeTrace* trace = nullptr);
  const BackboneSpec& spec() const { return backbone_->spec(); }

 private:
  ConvBackbone backbone_{nullptr};
  LayerStack head_{nullptr};
};
TORCH_MODULE(AaeEncoder);

/// Latent 128 -> Linear/ReLU x2 -> ConvTranspose2d -> ConvTranspose3d x3,
/// ending in BatchNorm3d with no activation. Shared by the VAE and AAE.
class ConvDecoderImpl : public torch::nn::Module {
 public:
  explicit ConvDecoderImpl(const BackboneSpec& spec);
  torch::Tensor forward(torch::Tensor z, ShapeTrace* trace = nullptr);

 private:
  BackboneSpec spec_;
  LayerStack layers_{nullptr};
};
TORCH_MODULE(ConvDecoder);

/// WGAN critic on latent codes: Linear 128->64, ReLU, Linear 64->1.
class CriticImpl : public torch::nn::Module {
 public:
  CriticImpl();
  torch::Tensor forward(torch::Tensor z, ShapeTrace* trace = nullptr);

 private:
  LayerStack layers_{nullptr};
};
TORCH_MODULE(Critic);

struct ContrastOutputs {
  torch::Tensor feature;    // N x 128, L2-normalized, pre-head
  torch::Tensor projected;  // N x 128, L2-normalized, head output
};

/// 1024-d autoencoder features viewed as 64x4x4 maps, widened by two
/// transposed convolutions and narrowed by three convolutions to 32x2x2
/// (the 128-d contrast feature), followed by a Linear/ReLU/Linear
/// projection head.
class ContrastEncoderImpl : public torch::nn::Module {
 public:
  ContrastEncoderImpl();
  ContrastOutputs forward(torch::Tensor features, ShapeTrace* trace = nullptr);

 private:
  LayerStack trunk_{nullptr};
  LayerStack head_{nullptr};
};
TORCH_MODULE(ContrastEncoder);

int64_t parameter_count(const torch::nn::Module& module);

/// Rejects modules left in training mode; feature extraction needs the
/// batch-norm running statistics.
void require_eval_mode(const torch::nn::Module& module, const std::string& what);

}  // namespace hspcl::nets
