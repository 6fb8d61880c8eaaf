#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "modspace/rational.hpp"
#include "modspace/stft.hpp"

namespace modspace {

/// Polynomial time-frequency weight <x>^{s1} <w>^{s2}, extended by 1 to any
/// further variables when used on symbol phase space.
template <class Scalar>
struct WeightSpec {
  Scalar s1 = 0;
  Scalar s2 = 0;
  bool tensorExtend = true;

  Scalar operator()(Scalar x, Scalar w) const {
    Scalar v(1);
    if (s1 != 0) v *= std::pow(Scalar(1) + x * x, s1 / 2);
    if (s2 != 0) v *= std::pow(Scalar(1) + w * w, s2 / 2);
    return v;
  }
  bool isTrivial() const { return s1 == 0 && s2 == 0; }
};

/// Measured moderateness constant: max of w(x+y) / (v_s(x) w(y)) with
/// s = |s1| + |s2| over a probe set. Finite (and modest) for every WeightSpec.
template <class Scalar>
Scalar moderateConstant(const WeightSpec<Scalar>& w, Scalar probeExtent = Scalar(8),
                        int probesPerAxis = 9) {
  const Scalar s = std::abs(w.s1) + std::abs(w.s2);
  Scalar worst = 0;
  auto probe = [&](int i) {
    return -probeExtent + Scalar(2) * probeExtent * Scalar(i) / Scalar(probesPerAxis - 1);
  };
  for (int i1 = 0; i1 < probesPerAxis; ++i1)
    for (int i2 = 0; i2 < probesPerAxis; ++i2)
      for (int j1 = 0; j1 < probesPerAxis; ++j1)
        for (int j2 = 0; j2 < probesPerAxis; ++j2) {
          const Scalar x1 = probe(i1), x2 = probe(i2), y1 = probe(j1), y2 = probe(j2);
          const Scalar vs = std::pow(Scalar(1) + x1 * x1 + x2 * x2, s / 2);
          worst = std::max(worst, w(x1 + y1, x2 + y2) / (vs * w(y1, y2)));
        }
  return worst;
}

/// A computed norm value together with the spec that produced it.
template <class Scalar>
struct NormResult {
  Scalar value = 0;
  Recip p, q;
  Scalar s1 = 0, s2 = 0;
  std::string windowId;
  Eigen::Index n = 0;
  Scalar extent = 0;
};

namespace detail {

/// Streaming evaluator of the iterated norm: inner dx-weighted p-norm over x
/// (fed row by row), outer dxi-weighted q-norm over frequency at finish().
/// Exponent infinity is the max over samples.
template <class Scalar>
class MixedNormAccumulator {
 public:
  MixedNormAccumulator(Eigen::Index cols, Recip p, Scalar dx) : p_(p), dx_(dx), acc_(cols, 0) {}

  /// row[c] must hold |V(x_j, w_c)| * weight(x_j, w_c).
  void addRow(const Scalar* row) {
    const Eigen::Index cols = static_cast<Eigen::Index>(acc_.size());
    if (p_.isInfinity()) {
      for (Eigen::Index c = 0; c < cols; ++c) acc_[c] = std::max(acc_[c], row[c]);
      return;
    }
    const double p = p_.exponent();
    if (p == 1.0) {
      for (Eigen::Index c = 0; c < cols; ++c) acc_[c] += row[c] * dx_;
    } else if (p == 2.0) {
      for (Eigen::Index c = 0; c < cols; ++c) acc_[c] += row[c] * row[c] * dx_;
    } else {
      for (Eigen::Index c = 0; c < cols; ++c) acc_[c] += std::pow(row[c], Scalar(p)) * dx_;
    }
  }

  Scalar finish(Recip q, Scalar dxi) const {
    const Eigen::Index cols = static_cast<Eigen::Index>(acc_.size());
    std::vector<Scalar> inner(acc_.size());
    if (p_.isInfinity()) {
      inner = acc_;
    } else {
      const double p = p_.exponent();
      for (Eigen::Index c = 0; c < cols; ++c)
        inner[c] = (p == 1.0) ? acc_[c] : std::pow(acc_[c], Scalar(1.0 / p));
    }
    if (q.isInfinity()) {
      Scalar best = 0;
      for (Scalar v : inner) best = std::max(best, v);
      return best;
    }
    const double q_ = q.exponent();
    Scalar sum = 0;
    for (Scalar v : inner) sum += std::pow(v, Scalar(q_));
    return std::pow(sum * dxi, Scalar(1.0 / q_));
  }

 private:
  Recip p_;
  Scalar dx_;
  std::vector<Scalar> acc_;
};

}  // namespace detail

/// Weighted mixed norm || |V| w ||_{L^{p,q}} of a sampled STFT.
template <class Scalar>
Scalar mixedNorm(const StftMatrix<Scalar>& V, Recip p, Recip q,
                 const WeightSpec<Scalar>& w = {}) {
  const Eigen::Index rows = V.values.rows(), cols = V.values.cols();
  detail::MixedNormAccumulator<Scalar> acc(cols, p, V.positionGrid.dx);
  std::vector<Scalar> row(cols);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const Scalar x = V.positionGrid.point(j);
    for (Eigen::Index c = 0; c < cols; ++c) {
      Scalar v = std::abs(V.values(j, c));
      if (!w.isTrivial()) v *= w(x, V.frequencyGrid.point(c));
      row[c] = v;
    }
    acc.addRow(row.data());
  }
  return acc.finish(q, V.frequencyGrid.dx);
}

/// Modulation-space norm ||f||_{M^{p,q}_w} = || V_g f ||_{L^{p,q}_w},
/// streamed without materializing the full STFT matrix.
template <class Scalar>
NormResult<Scalar> modulationNorm(const Signal<Scalar>& f, Recip p, Recip q,
                                  const WeightSpec<Scalar>& w, const Window<Scalar>& g,
                                  std::string windowId = "custom") {
  const Eigen::Index n = f.grid.n;
  const Grid1D<Scalar> dual = f.grid.dual();
  detail::MixedNormAccumulator<Scalar> acc(n, p, f.grid.dx);
  std::vector<Scalar> row(n);
  detail::stftRows(f, g, [&](Eigen::Index j, const std::complex<Scalar>* stftRow) {
    const Scalar x = f.grid.point(j);
    for (Eigen::Index c = 0; c < n; ++c) {
      Scalar v = std::abs(stftRow[c]);
      if (!w.isTrivial()) v *= w(x, dual.point(c));
      row[c] = v;
    }
    acc.addRow(row.data());
  });
  return NormResult<Scalar>{acc.finish(q, dual.dx), p,    q,
                            w.s1,                   w.s2, std::move(windowId),
                            n,                      f.grid.extent()};
}

template <class Scalar>
NormResult<Scalar> modulationNorm(const Signal<Scalar>& f, Recip p, Recip q,
                                  const WeightSpec<Scalar>& w = {}) {
  return modulationNorm(f, p, q, w, gaussianWindow(f.grid), "gaussian");
}

/// Wiener-amalgam norm ||f||_{W(FL^p, L^q)} realized through the identity
/// F(M^{p,q}) = W(FL^p, L^q): the modulation norm of the inverse transform.
template <class Scalar>
NormResult<Scalar> amalgamNorm(const Signal<Scalar>& f, Recip p, Recip q,
                               const Window<Scalar>& g) {
  const Signal<Scalar> finv = inverseFourier(f);
  if (finv.grid != g.grid())
    throw std::invalid_argument("amalgamNorm: window must live on the dual grid of f");
  auto r = modulationNorm(finv, p, q, WeightSpec<Scalar>{}, g, "gaussian");
  return r;
}

template <class Scalar>
NormResult<Scalar> amalgamNorm(const Signal<Scalar>& f, Recip p, Recip q) {
  const Signal<Scalar> finv = inverseFourier(f);
  auto r = modulationNorm(finv, p, q, WeightSpec<Scalar>{}, gaussianWindow(finv.grid), "gaussian");
  return r;
}

/// Plain Lebesgue norm (sum |f|^p dx)^{1/p}; max over samples at p = inf.
template <class Scalar>
Scalar lebesgueNorm(const Signal<Scalar>& f, Recip p) {
  if (p.isInfinity()) return f.samples.cwiseAbs().maxCoeff();
  const double pe = p.exponent();
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < f.grid.n; ++i) sum += std::pow(std::abs(f.samples[i]), Scalar(pe));
  return std::pow(sum * f.grid.dx, Scalar(1.0 / pe));
}

/// Ratio table for the compact-support / band-limited norm equivalences.
template <class Scalar>
struct NormEquivalenceReport {
  std::vector<std::pair<Recip, Scalar>> ratios;
  Scalar spread = 0;       // max ratio / min ratio
  bool zeroInput = false;  // all ratios 0/0; spread undefined
};

namespace detail {

template <class Scalar>
NormEquivalenceReport<Scalar> ratioReport(const Signal<Scalar>& f, Recip q,
                                          const std::vector<Recip>& pGrid, Scalar reference) {
  NormEquivalenceReport<Scalar> rep;
  if (reference == Scalar(0)) {
    rep.zeroInput = true;
    for (const auto& p : pGrid) rep.ratios.emplace_back(p, Scalar(0));
    return rep;
  }
  Scalar lo = std::numeric_limits<Scalar>::max(), hi = 0;
  for (const auto& p : pGrid) {
    const Scalar ratio = modulationNorm(f, p, q).value / reference;
    rep.ratios.emplace_back(p, ratio);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  rep.spread = hi / lo;
  return rep;
}

}  // namespace detail

/// For f supported in |x| <= supportRadius: ratios ||f||_{M^{p,q}} / ||F f||_{L^q}
/// across pGrid, which the compact-support equivalence keeps in a bounded band.
template <class Scalar>
NormEquivalenceReport<Scalar> compactSupportNormCheck(const Signal<Scalar>& f,
                                                      Scalar supportRadius, Recip q,
                                                      const std::vector<Recip>& pGrid) {
  const Scalar peak = f.samples.cwiseAbs().maxCoeff();
  Scalar tail = 0;
  for (Eigen::Index i = 0; i < f.grid.n; ++i)
    if (std::abs(f.grid.point(i)) > supportRadius) tail = std::max(tail, std::abs(f.samples[i]));
  if (peak > Scalar(0) && tail > Scalar(1e-12) * peak)
    throw std::invalid_argument("compactSupportNormCheck: signal tail exceeds 1e-12 outside the stated support");
  return detail::ratioReport(f, q, pGrid, lebesgueNorm(fourier(f), q));
}

/// Dual direction: for band-limited f, ratios ||f||_{M^{p,q}} / ||f||_{L^p}.
template <class Scalar>
NormEquivalenceReport<Scalar> bandLimitedNormCheck(const Signal<Scalar>& f, Scalar bandRadius,
                                                   Recip q, const std::vector<Recip>& pGrid) {
  const Signal<Scalar> fhat = fourier(f);
  const Scalar peak = fhat.samples.cwiseAbs().maxCoeff();
  Scalar tail = 0;
  for (Eigen::Index i = 0; i < fhat.grid.n; ++i)
    if (std::abs(fhat.grid.point(i)) > bandRadius) tail = std::max(tail, std::abs(fhat.samples[i]));
  if (peak > Scalar(0) && tail > Scalar(1e-12) * peak)
    throw std::invalid_argument("bandLimitedNormCheck: spectrum tail exceeds 1e-12 outside the stated band");
  NormEquivalenceReport<Scalar> rep;
  if (peak == Scalar(0)) {
    rep.zeroInput = true;
    for (const auto& p : pGrid) rep.ratios.emplace_back(p, Scalar(0));
    return rep;
  }
  Scalar lo = std::numeric_limits<Scalar>::max(), hi = 0;
  for (const auto& p : pGrid) {
    const Scalar ratio = modulationNorm(f, p, q).value / lebesgueNorm(f, p);
    rep.ratios.emplace_back(p, ratio);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  rep.spread = hi / lo;
  return rep;
}

}  // namespace modspace
