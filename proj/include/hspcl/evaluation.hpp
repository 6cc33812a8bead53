#pragma once

#include <torch/torch.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hspcl/svm.hpp"
#include "json.hpp"

namespace hspcl::eval {

struct ClassificationReport {
  /// Percent correct for classes 1..C; empty optional when a class has no
  /// test samples.
  std::vector<std::optional<double>> per_class_acc;
  double overall_accuracy = 0.0;   // OA, percent
  double average_accuracy = 0.0;   // AA, percent
  std::vector<std::vector<int64_t>> confusion;  // [true][predicted], classes 1..C
  double train_time_s = 0.0;
  double extract_time_s = 0.0;

  int64_t num_classes() const { return static_cast<int64_t>(confusion.size()); }
};

/// Builds a report from labels in 1..num_classes.
ClassificationReport report_from_predictions(const std::vector<int64_t>& truth,
                                             const std::vector<int64_t>& predicted,
                                             int64_t num_classes);

ClassificationReport evaluate(const SvmClassifier& classifier, const torch::Tensor& test_features,
                              const std::vector<int64_t>& test_labels, int64_t num_classes);

/// Rejects any index shared by the two lists.
void require_disjoint(const std::vector<int64_t>& train, const std::vector<int64_t>& test);

/// With `include_timing` false the JSON depends only on the predictions.
nlohmann::json to_json(const ClassificationReport& report, bool include_timing = true);
ClassificationReport report_from_json(const nlohmann::json& j);

/// Wall-clock seconds taken by one call of `pass`.
double time_extraction(const std::function<void()>& pass);

}  // namespace hspcl::eval
