#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hspcl::eval {

struct SvmConfig {
  double c = 100.0;
  /// RBF width; defaults to 1 / (D * variance of the standardized train features).
  std::optional<double> gamma;
  double tolerance = 1e-3;
  int64_t max_iterations = 10'000'000;
  bool standardize = true;
};

/// One-vs-one RBF C-SVC. Each binary problem is solved by SMO with
/// second-order working-set selection.
class SvmClassifier {
 public:
  static SvmClassifier fit(const torch::Tensor& features, const std::vector<int64_t>& labels,
                           const SvmConfig& config = {});

  std::vector<int64_t> predict(const torch::Tensor& features) const;

  /// Rows x pairs decision values; positive favours the first class of the pair.
  torch::Tensor decision_values(const torch::Tensor& features) const;

  const std::vector<int64_t>& classes() const { return classes_; }
  const std::vector<std::pair<int64_t, int64_t>>& pairs() const { return pairs_; }
  double gamma() const { return gamma_; }

 private:
  torch::Tensor prepare(const torch::Tensor& features) const;

  std::vector<int64_t> classes_;
  std::vector<std::pair<int64_t, int64_t>> pairs_;  // indices into classes_
  torch::Tensor mean_, scale_;                      // D, float64
  torch::Tensor support_;                           // n x D, float64 standardized train rows
  torch::Tensor coef_;                              // n x P, alpha_i * y_i per pair
  torch::Tensor rho_;                               // P
  double gamma_ = 0.0;
};

/// Binary C-SVC dual on a precomputed kernel; y in {-1, +1}. Returns
/// (alpha, rho) with decision f(x) = sum_i alpha_i y_i K(x_i, x) - rho.
std::pair<std::vector<double>, double> solve_binary_svm(const torch::Tensor& kernel,
                                                        const std::vector<int>& y, double c,
                                                        double tolerance, int64_t max_iterations);

/// exp(-gamma * ||a_i - b_j||^2), float64.
torch::Tensor rbf_kernel(const torch::Tensor& a, const torch::Tensor& b, double gamma);

}  // namespace hspcl::eval
