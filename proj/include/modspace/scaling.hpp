#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace modspace {

/// Log-log power-law fit over a lambda sweep.
struct ScalingFit {
  std::vector<double> lambdas;
  std::vector<double> values;
  double slope = 0;
  double intercept = 0;
  double rsquared = 1;
};

/// Ordinary least squares of log(value) against log(lambda).
inline ScalingFit fitScaling(std::vector<double> lambdas, std::vector<double> values) {
  if (lambdas.size() != values.size())
    throw std::invalid_argument("fitScaling: size mismatch");
  if (lambdas.size() < 4) throw std::invalid_argument("fitScaling: need at least 4 points");
  const std::size_t n = lambdas.size();
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambdas[i] > 0)) throw std::invalid_argument("fitScaling: lambdas must be positive");
    if (!(values[i] > 0)) throw std::invalid_argument("fitScaling: values must be positive");
    x[i] = std::log(lambdas[i]);
    y[i] = std::log(values[i]);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fitScaling: lambdas are all equal");
  ScalingFit fit;
  fit.lambdas = std::move(lambdas);
  fit.values = std::move(values);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssRes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ssRes += r * r;
  }
  fit.rsquared = syy == 0 ? 1.0 : std::max(0.0, std::min(1.0, 1.0 - ssRes / syy));
  return fit;
}

/// Geometric sweep from lo to hi at the given density (points per octave).
inline std::vector<double> geometricSweep(double lo, double hi, int pointsPerOctave = 8) {
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("geometricSweep: need 0 < lo < hi");
  if (pointsPerOctave < 1) throw std::invalid_argument("geometricSweep: density must be >= 1");
  const double octaves = std::log2(hi / lo);
  const int count = std::max(4, static_cast<int>(std::lround(octaves * pointsPerOctave)) + 1);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, double(i) / double(count - 1));
  return out;
}

}  // namespace modspace
