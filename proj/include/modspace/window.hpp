#pragma once

#include <cmath>
#include <functional>

#include "modspace/grid.hpp"

namespace modspace {

/// Analysis window: a signal plus a tag recording unit L2 normalization and
/// an optional closed-form evaluator for off-lattice translates.
template <class Scalar>
struct Window {
  Signal<Scalar> signal;
  bool unitL2 = false;
  std::function<std::complex<Scalar>(Scalar)> closedForm;

  const Grid1D<Scalar>& grid() const { return signal.grid; }
};

namespace detail {

/// Windows must be numerically supported well inside the torus so that
/// periodic translates behave like translates on the line.
template <class Scalar>
void checkWindowDecay(const Signal<Scalar>& g) {
  const Scalar peak = g.samples.cwiseAbs().maxCoeff();
  if (!(peak > Scalar(0))) throw std::invalid_argument("Window: zero window");
  const Scalar quarter = g.grid.extent() / 4;
  Scalar tail = 0;
  for (Eigen::Index i = 0; i < g.grid.n; ++i)
    if (std::abs(g.grid.point(i)) >= quarter) tail = std::max(tail, std::abs(g.samples[i]));
  if (tail > Scalar(1e-12) * peak)
    throw std::invalid_argument("Window: window does not decay below 1e-12 within a quarter extent of the boundary");
}

}  // namespace detail

template <class Scalar>
Window<Scalar> makeWindow(const Signal<Scalar>& g, bool unitTag = false) {
  detail::checkWindowDecay(g);
  if (unitTag) {
    const Scalar norm = l2Norm(g);
    if (std::abs(norm - Scalar(1)) > Scalar(1e-10))
      throw std::invalid_argument("Window: unit tag set but ||g||_2 != 1");
  }
  return Window<Scalar>{g, unitTag, nullptr};
}

template <class Scalar>
Window<Scalar> normalizedWindow(const Signal<Scalar>& g) {
  detail::checkWindowDecay(g);
  const Scalar norm = l2Norm(g);
  Signal<Scalar> scaled(g.grid, g.samples / norm);
  return Window<Scalar>{std::move(scaled), true, nullptr};
}

/// The default window: the L2-normalized Gaussian 2^{1/4} e^{-pi x^2}.
template <class Scalar>
Window<Scalar> gaussianWindow(const Grid1D<Scalar>& grid) {
  const Scalar amp = std::pow(Scalar(2), Scalar(0.25));
  auto f = [amp](Scalar x) {
    return std::complex<Scalar>(amp * std::exp(-Scalar(EIGEN_PI) * x * x), 0);
  };
  Window<Scalar> w{sampled(grid, f), true, f};
  detail::checkWindowDecay(w.signal);
  return w;
}

}  // namespace modspace
