#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/mixed_norm.hpp"
#include "modspace/phase.hpp"
#include "modspace/stft.hpp"
#include "modspace/window.hpp"

namespace modspace {

/// Symbol sigma(x, eta) sampled on positionGrid x frequencyGrid, optionally
/// backed by a closed form for off-grid evaluation or lazy materialization.
template <class Scalar>
struct SymbolGrid {
  Grid1D<Scalar> positionGrid;
  Grid1D<Scalar> frequencyGrid;
  ComplexMatrix<Scalar> values;
  std::function<std::complex<Scalar>(Scalar, Scalar)> closedForm;

  bool hasValues() const { return values.size() > 0; }

  std::complex<Scalar> at(Eigen::Index i, Eigen::Index j) const {
    if (hasValues()) return values(i, j);
    return closedForm(positionGrid.point(i), frequencyGrid.point(j));
  }

  void materialize() {
    if (hasValues()) return;
    if (!closedForm) throw std::invalid_argument("SymbolGrid: nothing to materialize");
    values.resize(positionGrid.n, frequencyGrid.n);
    for (Eigen::Index j = 0; j < frequencyGrid.n; ++j)
      for (Eigen::Index i = 0; i < positionGrid.n; ++i)
        values(i, j) = closedForm(positionGrid.point(i), frequencyGrid.point(j));
  }
};

template <class Scalar>
SymbolGrid<Scalar> symbolFromClosedForm(const Grid1D<Scalar>& positionGrid,
                                        const Grid1D<Scalar>& frequencyGrid,
                                        std::function<std::complex<Scalar>(Scalar, Scalar)> f) {
  return SymbolGrid<Scalar>{positionGrid, frequencyGrid, {}, std::move(f)};
}

/// || sigma ||_{L^2} with the grid cell as quadrature weight.
template <class Scalar>
Scalar symbolL2Norm(const SymbolGrid<Scalar>& sigma) {
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < sigma.frequencyGrid.n; ++j)
    for (Eigen::Index i = 0; i < sigma.positionGrid.n; ++i) sum += std::norm(sigma.at(i, j));
  return std::sqrt(sum * sigma.positionGrid.dx * sigma.frequencyGrid.dx);
}

struct FioApplyInfo {
  bool aliasingWarning = false;
  double boundaryDecay = 0;  // max |f^| near the frequency boundary / max |f^|
};

/// T f(x) = \int e^{2pi i Phi(x,eta)} sigma(x,eta) f^(eta) d eta by direct
/// O(N^2) quadrature over the dual grid.
template <class Scalar>
Signal<Scalar> applyFio(const PhaseSpec<Scalar>& phase, const SymbolGrid<Scalar>& sigma,
                        const Signal<Scalar>& f, FioApplyInfo* info = nullptr) {
  const Grid1D<Scalar> dual = f.grid.dual();
  if (sigma.hasValues() &&
      (sigma.positionGrid != f.grid || sigma.frequencyGrid != dual))
    throw std::invalid_argument("applyFio: symbol grids incompatible with the signal grid");
  const Signal<Scalar> fhat = fourier(f);
  const Eigen::Index n = f.grid.n;

  // Boundary-decay check: the quadrature is only faithful when f^ has died
  // out before the frequency boundary.
  const Scalar peak = fhat.samples.cwiseAbs().maxCoeff();
  Scalar edge = 0;
  const Scalar bound = dual.extent() / 2 * Scalar(0.875);
  for (Eigen::Index k = 0; k < n; ++k)
    if (std::abs(dual.point(k)) >= bound) edge = std::max(edge, std::abs(fhat.samples[k]));
  const Scalar decay = peak > Scalar(0) ? edge / peak : Scalar(0);
  if (info) {
    info->boundaryDecay = static_cast<double>(decay);
    info->aliasingWarning = decay > Scalar(1e-12);
  }

  Signal<Scalar> out(f.grid);
  constexpr Scalar twoPi = Scalar(2) * Scalar(EIGEN_PI);
  std::vector<Scalar> eta(n);
  for (Eigen::Index k = 0; k < n; ++k) eta[k] = dual.point(k);
  for (Eigen::Index m = 0; m < n; ++m) {
    const Scalar x = f.grid.point(m);
    std::complex<Scalar> acc(0, 0);
    if (sigma.hasValues()) {
      for (Eigen::Index k = 0; k < n; ++k)
        acc += std::polar(Scalar(1), twoPi * phase.value(x, eta[k])) * sigma.values(m, k) *
               fhat.samples[k];
    } else {
      for (Eigen::Index k = 0; k < n; ++k)
        acc += std::polar(Scalar(1), twoPi * phase.value(x, eta[k])) *
               sigma.closedForm(x, eta[k]) * fhat.samples[k];
    }
    out.samples[m] = acc * dual.dx;
  }
  return out;
}

/// Time-frequency shift g_{x,w} = M_w T_x g; off-lattice x needs the window's
/// closed form.
template <class Scalar>
Signal<Scalar> timeFrequencyShift(const Window<Scalar>& g, Scalar x, Scalar w) {
  const Grid1D<Scalar>& grid = g.grid();
  const Scalar raw = x / grid.dx;
  Signal<Scalar> shifted(grid);
  if (std::abs(raw - std::round(raw)) <= Scalar(1e-9)) {
    shifted = translate(g.signal, x);
  } else if (g.closedForm) {
    shifted = sampled(grid, [&](Scalar y) { return g.closedForm(y - x); });
  } else {
    throw std::domain_error("timeFrequencyShift: off-lattice x needs a closed-form window");
  }
  return modulate(shifted, w);
}

/// The window Psi_z(zeta) = e^{2pi i Phi_{2,z}(zeta)} (conj(g) x g^)(zeta),
/// sampled on grid x dual grid. Independent of z for quadratic phases.
template <class Scalar>
SymbolGrid<Scalar> psiWindow(const PhaseSpec<Scalar>& phase, const Window<Scalar>& g, Scalar zx,
                             Scalar ze) {
  const Grid1D<Scalar>& grid = g.grid();
  const Grid1D<Scalar> dual = grid.dual();
  const Signal<Scalar> ghat = fourier(g.signal);
  SymbolGrid<Scalar> psi{grid, dual, ComplexMatrix<Scalar>(grid.n, dual.n), nullptr};
  constexpr Scalar twoPi = Scalar(2) * Scalar(EIGEN_PI);
  for (Eigen::Index j = 0; j < dual.n; ++j) {
    const Scalar zeta2 = dual.point(j);
    for (Eigen::Index i = 0; i < grid.n; ++i) {
      const Scalar zeta1 = grid.point(i);
      const Scalar ph = taylorRemainderPhase(phase, zx, ze, zeta1, zeta2);
      psi.values(i, j) = std::polar(Scalar(1), twoPi * ph) * std::conj(g.signal.samples[i]) *
                         ghat.samples[j];
    }
  }
  return psi;
}

/// Pointwise STFT of a 2-D symbol: V_Psi sigma(u1, u2) with u1 lattice
/// aligned and u2 arbitrary, by direct quadrature over the symbol grid.
template <class Scalar>
std::complex<Scalar> symbolStftPoint(const SymbolGrid<Scalar>& sigma,
                                     const SymbolGrid<Scalar>& psi, Scalar u1x, Scalar u1e,
                                     Scalar u2x, Scalar u2e) {
  const Eigen::Index n1 = sigma.positionGrid.n, n2 = sigma.frequencyGrid.n;
  if (psi.positionGrid != sigma.positionGrid || psi.frequencyGrid != sigma.frequencyGrid)
    throw std::invalid_argument("symbolStftPoint: window grids do not match the symbol");
  const Eigen::Index i0 = sigma.positionGrid.indexOf(u1x);
  const Eigen::Index j0 = sigma.frequencyGrid.indexOf(u1e);
  constexpr Scalar twoPi = Scalar(2) * Scalar(EIGEN_PI);
  std::vector<std::complex<Scalar>> e1(n1), e2(n2);
  std::vector<Eigen::Index> wrap1(n1), wrap2(n2);
  for (Eigen::Index m = 0; m < n1; ++m) {
    e1[m] = std::polar(Scalar(1), -twoPi * sigma.positionGrid.point(m) * u2x);
    wrap1[m] = detail::translateIndex(m, i0, n1);
  }
  for (Eigen::Index k = 0; k < n2; ++k) {
    e2[k] = std::polar(Scalar(1), -twoPi * sigma.frequencyGrid.point(k) * u2e);
    wrap2[k] = detail::translateIndex(k, j0, n2);
  }
  std::complex<Scalar> total(0, 0);
  for (Eigen::Index k = 0; k < n2; ++k) {
    std::complex<Scalar> colSum(0, 0);
    const Eigen::Index pk = wrap2[k];
    if (sigma.hasValues()) {
      const auto* scol = sigma.values.col(k).data();
      const auto* pcol = psi.values.col(pk).data();
      for (Eigen::Index m = 0; m < n1; ++m)
        colSum += scol[m] * std::conj(pcol[wrap1[m]]) * e1[m];
    } else {
      const auto* pcol = psi.values.col(pk).data();
      const Scalar y2 = sigma.frequencyGrid.point(k);
      for (Eigen::Index m = 0; m < n1; ++m)
        colSum += sigma.closedForm(sigma.positionGrid.point(m), y2) * std::conj(pcol[wrap1[m]]) *
                  e1[m];
    }
    total += colSum * e2[k];
  }
  return total * (sigma.positionGrid.dx * sigma.frequencyGrid.dx);
}

/// Gabor matrix entry <T g_{x,w}, g_{x',w'}> by operator application.
template <class Scalar>
std::complex<Scalar> gaborMatrixDirect(const PhaseSpec<Scalar>& phase,
                                       const SymbolGrid<Scalar>& sigma, const Window<Scalar>& g,
                                       Scalar x, Scalar w, Scalar xp, Scalar wp) {
  const Signal<Scalar> atom = timeFrequencyShift(g, x, w);
  const Signal<Scalar> image = applyFio(phase, sigma, atom);
  return inner(image, timeFrequencyShift(g, xp, wp));
}

/// Same magnitude through the Gabor-matrix identity
///   |<T g_{x,w}, g_{x',w'}>| = |V_{Psi_{(x',w)}} sigma(x', w, w' - grad_x Phi(x',w),
///                                                     x - grad_eta Phi(x',w))|.
template <class Scalar>
Scalar gaborMatrixViaStft(const PhaseSpec<Scalar>& phase, const SymbolGrid<Scalar>& sigma,
                          const Window<Scalar>& g, Scalar x, Scalar w, Scalar xp, Scalar wp) {
  const SymbolGrid<Scalar> psi = psiWindow(phase, g, xp, w);
  const Scalar u2x = wp - phase.gradX(xp, w);
  const Scalar u2e = x - phase.gradE(xp, w);
  return std::abs(symbolStftPoint(sigma, psi, xp, w, u2x, u2e));
}

namespace detail {

/// Centered 2-D DFT of an n1 x n2 array with quadrature weight w1 * w2.
template <class Scalar>
void centeredDft2(ComplexMatrix<Scalar>& a, Scalar w1, Scalar w2) {
  const Eigen::Index n1 = a.rows(), n2 = a.cols();
  CenteredDftPlan<Scalar> plan1(n1), plan2(n2);
  std::vector<std::complex<Scalar>> buf(std::max(n1, n2)), out(std::max(n1, n2));
  for (Eigen::Index j = 0; j < n2; ++j) {
    for (Eigen::Index i = 0; i < n1; ++i) buf[i] = a(i, j);
    plan1.run(buf.data(), out.data(), w1, true);
    for (Eigen::Index i = 0; i < n1; ++i) a(i, j) = out[i];
  }
  for (Eigen::Index i = 0; i < n1; ++i) {
    for (Eigen::Index j = 0; j < n2; ++j) buf[j] = a(i, j);
    plan2.run(buf.data(), out.data(), w2, true);
    for (Eigen::Index j = 0; j < n2; ++j) a(i, j) = out[j];
  }
}

/// Mixed L^{p,q}_{1 x m} norm over the 4-D symbol phase space of
/// sup over the given windows of |V_W sigma|, streamed over u1.
template <class Scalar>
Scalar symbolSupMixedNorm(const SymbolGrid<Scalar>& sigma,
                          const std::vector<ComplexMatrix<Scalar>>& windows, Recip p, Recip q,
                          const WeightSpec<Scalar>& m) {
  const Eigen::Index n1 = sigma.positionGrid.n, n2 = sigma.frequencyGrid.n;
  const Grid1D<Scalar> dual1 = sigma.positionGrid.dual(), dual2 = sigma.frequencyGrid.dual();
  const Scalar du1 = sigma.positionGrid.dx * sigma.frequencyGrid.dx;
  const double pe = p.exponent();

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> acc =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n1, n2);
  ComplexMatrix<Scalar> prod(n1, n2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> best(n1, n2);
  for (Eigen::Index i0 = 0; i0 < n1; ++i0)
    for (Eigen::Index j0 = 0; j0 < n2; ++j0) {
      best.setZero();
      for (const auto& w : windows) {
        for (Eigen::Index j = 0; j < n2; ++j) {
          const Eigen::Index wj = translateIndex(j, j0, n2);
          for (Eigen::Index i = 0; i < n1; ++i)
            prod(i, j) = sigma.at(i, j) * std::conj(w(translateIndex(i, i0, n1), wj));
        }
        centeredDft2(prod, sigma.positionGrid.dx, sigma.frequencyGrid.dx);
        best = best.cwiseMax(prod.cwiseAbs());
      }
      if (p.isInfinity())
        acc = acc.cwiseMax(best);
      else if (pe == 1.0)
        acc += best * du1;
      else if (pe == 2.0)
        acc += best.cwiseProduct(best) * du1;
      else
        acc += best.array().pow(Scalar(pe)).matrix() * du1;
    }

  // inner norm done; outer q-norm over u2 with weight m(u2)
  const Scalar du2 = dual1.dx * dual2.dx;
  Scalar result = 0;
  const double qe = q.exponent();
  for (Eigen::Index b = 0; b < n2; ++b)
    for (Eigen::Index a = 0; a < n1; ++a) {
      Scalar v = p.isInfinity() ? acc(a, b) : std::pow(acc(a, b), Scalar(1.0 / pe));
      if (!m.isTrivial()) v *= m(dual1.point(a), dual2.point(b));
      if (q.isInfinity())
        result = std::max(result, v);
      else
        result += std::pow(v, Scalar(qe));
    }
  if (!q.isInfinity()) result = std::pow(result * du2, Scalar(1.0 / qe));
  return result;
}

}  // namespace detail

/// Prop-2.8 style symbol norm: mixed L^{p,q}_{1 x m} norm of
/// sup_{z in zGrid} |V_{Psi_z} sigma| over the discretized 4-D phase space.
/// Monotone nondecreasing in zGrid; z-independent for quadratic phases.
template <class Scalar>
Scalar symbolNormSupZ(const SymbolGrid<Scalar>& sigma, const PhaseSpec<Scalar>& phase,
                      const Window<Scalar>& g, Recip p, Recip q, const WeightSpec<Scalar>& m,
                      const std::vector<std::pair<Scalar, Scalar>>& zGrid) {
  if (zGrid.empty()) throw std::invalid_argument("symbolNormSupZ: zGrid must be nonempty");
  std::vector<ComplexMatrix<Scalar>> windows;
  windows.reserve(zGrid.size());
  for (const auto& [zx, ze] : zGrid) windows.push_back(psiWindow(phase, g, zx, ze).values);
  return detail::symbolSupMixedNorm(sigma, windows, p, q, m);
}

/// Ordinary symbol modulation norm with the fixed tensor Gaussian window, for
/// ratio comparisons against symbolNormSupZ.
template <class Scalar>
Scalar symbolModulationNorm(const SymbolGrid<Scalar>& sigma, const Window<Scalar>& g, Recip p,
                            Recip q, const WeightSpec<Scalar>& m = {}) {
  const Signal<Scalar> gPos = g.signal;
  const Window<Scalar> gDual = gaussianWindow(sigma.frequencyGrid);
  ComplexMatrix<Scalar> tensor(sigma.positionGrid.n, sigma.frequencyGrid.n);
  for (Eigen::Index j = 0; j < sigma.frequencyGrid.n; ++j)
    for (Eigen::Index i = 0; i < sigma.positionGrid.n; ++i)
      tensor(i, j) = gPos.samples[i] * gDual.signal.samples[j];
  std::vector<ComplexMatrix<Scalar>> windows{std::move(tensor)};
  return detail::symbolSupMixedNorm(sigma, windows, p, q, m);
}

/// Adjoint-side symbol transform sigma(x,eta) -> conj(sigma(-eta,x)); needs a
/// self-dual square grid so the two axes are interchangeable.
template <class Scalar>
SymbolGrid<Scalar> adjointTransform(const SymbolGrid<Scalar>& sigma) {
  const Eigen::Index n = sigma.positionGrid.n;
  if (sigma.frequencyGrid.n != n ||
      std::abs(sigma.positionGrid.dx - sigma.frequencyGrid.dx) >
          Scalar(1e-12) * sigma.positionGrid.dx)
    throw std::invalid_argument("adjointTransform: needs matching square (self-dual) grids");
  SymbolGrid<Scalar> out{sigma.positionGrid, sigma.frequencyGrid, ComplexMatrix<Scalar>(n, n),
                         nullptr};
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) out.values(i, j) = std::conj(sigma.at((n - j) % n, i));
  return out;
}

}  // namespace modspace
