#include "modspace/config.hpp"

#include <fstream>

#include "modspace/descriptors.hpp"

namespace modspace {

ExperimentConfig ExperimentConfig::fromJson(const nlohmann::json& j) {
  ExperimentConfig c;
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    c.n = g.value("n", c.n);
    c.extent = g.value("extent", c.extent);
  }
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    c.windows.smallMin = s.value("small_min", c.windows.smallMin);
    c.windows.smallMax = s.value("small_max", c.windows.smallMax);
    c.windows.largeMin = s.value("large_min", c.windows.largeMin);
    c.windows.largeMax = s.value("large_max", c.windows.largeMax);
    c.windows.pointsPerOctave = s.value("points_per_octave", c.windows.pointsPerOctave);
    c.windows.allowAliasing = s.value("allow_aliasing", c.windows.allowAliasing);
  }
  c.phase = j.value("phase", c.phase);
  if (j.contains("quadratic")) {
    const auto& q = j.at("quadratic");
    QuadraticCoeffs<double> coeffs;
    coeffs.qxx = q.value("qxx", 0.0);
    coeffs.qxe = q.value("qxe", 1.0);
    coeffs.qee = q.value("qee", 0.0);
    coeffs.lx = q.value("lx", 0.0);
    coeffs.le = q.value("le", 0.0);
    coeffs.c = q.value("c", 0.0);
    c.quadratic = coeffs;
  }
  c.symbolFamily = j.value("symbol_family", c.symbolFamily);
  c.inputFamily = j.value("input_family", c.inputFamily);
  if (j.contains("norm")) {
    const auto& nm = j.at("norm");
    c.p = nm.value("p", c.p);
    c.q = nm.value("q", c.q);
    c.r1 = nm.value("r1", c.r1);
    c.r2 = nm.value("r2", c.r2);
    c.t1 = nm.value("t1", c.t1);
    c.t2 = nm.value("t2", c.t2);
    c.s1 = nm.value("s1", c.s1);
    c.s2 = nm.value("s2", c.s2);
  }
  c.outputDir = j.value("output_dir", c.outputDir);
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return fromJson(j);
}

nlohmann::json ExperimentConfig::toJson() const {
  nlohmann::json j;
  j["grid"] = {{"n", n}, {"extent", extent}};
  j["sweep"] = {{"small_min", windows.smallMin},
                {"small_max", windows.smallMax},
                {"large_min", windows.largeMin},
                {"large_max", windows.largeMax},
                {"points_per_octave", windows.pointsPerOctave},
                {"allow_aliasing", windows.allowAliasing}};
  j["phase"] = phase;
  if (quadratic) {
    j["quadratic"] = {{"qxx", quadratic->qxx}, {"qxe", quadratic->qxe}, {"qee", quadratic->qee},
                      {"lx", quadratic->lx},   {"le", quadratic->le},   {"c", quadratic->c}};
  }
  j["symbol_family"] = symbolFamily;
  j["input_family"] = inputFamily;
  j["norm"] = {{"p", p},   {"q", q},   {"r1", r1}, {"r2", r2},
               {"t1", t1}, {"t2", t2}, {"s1", s1}, {"s2", s2}};
  j["output_dir"] = outputDir;
  return j;
}

PhaseSpec<double> ExperimentConfig::makePhaseSpec() const {
  if (phase == "general-quadratic") {
    if (!quadratic)
      throw std::invalid_argument("phase 'general-quadratic' needs a 'quadratic' coefficient block");
    return PhaseSpec<double>::generalQuadratic(*quadratic);
  }
  return makePhase<double>(phase);
}

void ExperimentConfig::validate() const {
  if (!isPowerOfTwo(n) || n < 2)
    throw std::invalid_argument("config: grid n must be a power of two >= 2");
  if (!(extent > 0)) throw std::invalid_argument("config: grid extent must be positive");
  validateSweep(windows);
  (void)parseExponent(p);
  (void)parseExponent(q);
  (void)parseExponent(r1);
  (void)parseExponent(r2);
  (void)parseExponent(t1);
  (void)parseExponent(t2);
}

}  // namespace modspace
