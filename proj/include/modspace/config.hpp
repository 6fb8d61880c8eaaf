#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "modspace/experiments.hpp"
#include "modspace/phase.hpp"

namespace modspace {

/// Experiment configuration, loadable from a JSON file. The schema is
/// documented in the README.
struct ExperimentConfig {
  Eigen::Index n = 2048;
  double extent = 64;
  SweepWindows windows;
  std::string phase = "kohn-nirenberg";
  std::optional<QuadraticCoeffs<double>> quadratic;  // phase = "general-quadratic"
  std::string symbolFamily = "gaussian-pair";
  std::string inputFamily = "gaussian";
  std::string p = "2", q = "2", r1 = "2", r2 = "2", t1 = "2", t2 = "2";
  double s1 = 0, s2 = 0;
  std::string outputDir;

  static ExperimentConfig fromJson(const nlohmann::json& j);
  static ExperimentConfig fromJsonFile(const std::string& path);
  nlohmann::json toJson() const;

  ExperimentGrid grid() const { return ExperimentGrid{n, extent}; }
  PhaseSpec<double> makePhaseSpec() const;
  void validate() const;
};

}  // namespace modspace
