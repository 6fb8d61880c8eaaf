#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "modspace/fio.hpp"
#include "modspace/grid.hpp"

namespace modspace {

/// phi_lambda(x) = e^{-pi lambda^2 x^2}.
template <class Scalar>
Signal<Scalar> gaussianSignal(const Grid1D<Scalar>& grid, Scalar lambda) {
  return sampled(grid, [lambda](Scalar x) {
    return std::complex<Scalar>(std::exp(-Scalar(EIGEN_PI) * lambda * lambda * x * x), 0);
  });
}

/// h_{a+ib}(x) = e^{-pi (a+ib) x^2}.
template <class Scalar>
Signal<Scalar> chirpedGaussianSignal(const Grid1D<Scalar>& grid, Scalar a, Scalar b) {
  const std::complex<Scalar> z(a, b);
  return sampled(grid, [z](Scalar x) {
    return std::exp(-Scalar(EIGEN_PI) * z * x * x);
  });
}

/// Smooth compactly supported reference bump on [-radius, radius], peak 1.
template <class Scalar>
Scalar bumpValue(Scalar x, Scalar radius = Scalar(1)) {
  const Scalar t = x / radius;
  if (std::abs(t) >= Scalar(1)) return Scalar(0);
  return std::exp(Scalar(1) - Scalar(1) / (Scalar(1) - t * t));
}

template <class Scalar>
Signal<Scalar> bumpSignal(const Grid1D<Scalar>& grid, Scalar radius = Scalar(1)) {
  return sampled(grid,
                 [radius](Scalar x) { return std::complex<Scalar>(bumpValue(x, radius), 0); });
}

/// Band-limited reference signal: inverse transform of a frequency-side bump.
template <class Scalar>
Signal<Scalar> bandLimitedSignal(const Grid1D<Scalar>& grid, Scalar bandRadius = Scalar(1)) {
  Signal<Scalar> spectrumOnDual = bumpSignal(grid.dual(), bandRadius);
  return inverseFourier(spectrumOnDual);  // dual of dual = original grid
}

template <class Scalar>
Signal<Scalar> makeSignalFamily(const std::string& id, const Grid1D<Scalar>& grid, Scalar lambda) {
  if (id == "gaussian") return gaussianSignal(grid, lambda);
  if (id == "chirped-gaussian") return chirpedGaussianSignal(grid, lambda * lambda, Scalar(-1));
  if (id == "bump") return bumpSignal(grid, Scalar(1));
  if (id == "band-limited") return bandLimitedSignal(grid, Scalar(1));
  throw std::invalid_argument("unknown signal family '" + id + "'");
}

/// sigma == 1.
template <class Scalar>
SymbolGrid<Scalar> symbolOne(const Grid1D<Scalar>& pos, const Grid1D<Scalar>& freq) {
  return symbolFromClosedForm<Scalar>(pos, freq, [](Scalar, Scalar) {
    return std::complex<Scalar>(1, 0);
  });
}

/// sigma(x, eta) = e^{-pi (x^2 + eta^2)}.
template <class Scalar>
SymbolGrid<Scalar> symbolGaussian(const Grid1D<Scalar>& pos, const Grid1D<Scalar>& freq) {
  return symbolFromClosedForm<Scalar>(pos, freq, [](Scalar x, Scalar e) {
    return std::complex<Scalar>(std::exp(-Scalar(EIGEN_PI) * (x * x + e * e)), 0);
  });
}

/// The sharpness family sigma_lambda = phi_{lambda/sqrt(2)} (x) phi_{1/lambda} (eta).
template <class Scalar>
SymbolGrid<Scalar> symbolGaussianPair(const Grid1D<Scalar>& pos, const Grid1D<Scalar>& freq,
                                      Scalar lambda) {
  const Scalar lx = lambda / std::sqrt(Scalar(2));
  const Scalar le = Scalar(1) / lambda;
  return symbolFromClosedForm<Scalar>(pos, freq, [lx, le](Scalar x, Scalar e) {
    return std::complex<Scalar>(
        std::exp(-Scalar(EIGEN_PI) * (lx * lx * x * x + le * le * e * e)), 0);
  });
}

template <class Scalar>
SymbolGrid<Scalar> makeSymbolFamily(const std::string& id, const Grid1D<Scalar>& pos,
                                    const Grid1D<Scalar>& freq, Scalar lambda) {
  if (id == "one") return symbolOne(pos, freq);
  if (id == "gaussian") return symbolGaussian(pos, freq);
  if (id == "gaussian-pair") return symbolGaussianPair(pos, freq, lambda);
  throw std::invalid_argument("unknown symbol family '" + id + "'");
}

template <class Scalar>
PhaseSpec<Scalar> makePhase(const std::string& id) {
  if (id == "kohn-nirenberg") return PhaseSpec<Scalar>::kohnNirenberg();
  if (id == "quadratic-chirp") return PhaseSpec<Scalar>::quadraticChirp();
  if (id == "schrodinger-free") return PhaseSpec<Scalar>::schrodingerFree();
  throw std::invalid_argument("unknown phase '" + id + "' (use kohn-nirenberg, quadratic-chirp, schrodinger-free, or a general-quadratic config)");
}

}  // namespace modspace
