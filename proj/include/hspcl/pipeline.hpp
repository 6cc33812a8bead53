#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hspcl/config.hpp"

namespace hspcl::pipeline {

/// Feature sets compared by classify/report, in report order.
inline const std::vector<std::string> kFeatureSets{"aae", "vae", "contrast"};

/// Artifacts a stage reads, each paired with the stage that writes it,
/// ordered upstream first.
std::vector<std::pair<std::filesystem::path, Stage>> prerequisites(const ExperimentConfig& cfg,
                                                                   Stage stage);

/// Config hash embedded in any pipeline artifact (container header,
/// checkpoint, feature archive, or JSON document).
std::string artifact_hash(const std::filesystem::path& path);

/// Throws MissingPrerequisite naming the earliest producing stage when an input is
/// absent, ConfigMismatch when it was produced under a different config.
void check_prerequisites(const ExperimentConfig& cfg, Stage stage);

/// Runs one stage; outputs land under cfg.output_dir. Progress lines go to
/// `progress` when given.
void run_stage(const ExperimentConfig& cfg, Stage stage, std::ostream* progress = nullptr);

/// Every stage in order.
void run_all(const ExperimentConfig& cfg, std::ostream* progress = nullptr);

}  // namespace hspcl::pipeline
