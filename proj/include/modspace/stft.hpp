#pragma once

#include <complex>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/window.hpp"

namespace modspace {

/// Sampled short-time Fourier transform V_g f on the full position x dual
/// lattice; values(i, j) = V_g f(x_i, xi_j).
template <class Scalar>
struct StftMatrix {
  Grid1D<Scalar> positionGrid;
  Grid1D<Scalar> frequencyGrid;
  ComplexMatrix<Scalar> values;
};

namespace detail {

/// Reusable centered-DFT plan (FFT object plus scratch buffers).
template <class Scalar>
class CenteredDftPlan {
 public:
  explicit CenteredDftPlan(Eigen::Index n) : n_(n), a_(n), b_(n) {}

  void run(const std::complex<Scalar>* in, std::complex<Scalar>* out, Scalar weight,
           bool forward) {
    for (Eigen::Index k = 0; k < n_; ++k) a_[k] = (k & 1) ? -in[k] : in[k];
    if (forward)
      fft_.fwd(b_, a_);
    else {
      fft_.inv(b_, a_);
      weight *= Scalar(n_);
    }
    const Scalar global = (n_ % 4 == 2) ? Scalar(-1) : Scalar(1);
    for (Eigen::Index j = 0; j < n_; ++j) out[j] = b_[j] * (((j & 1) ? -global : global) * weight);
  }

 private:
  Eigen::Index n_;
  std::vector<std::complex<Scalar>> a_, b_;
  Eigen::FFT<Scalar> fft_;
};

/// Index of g's sample holding the periodic translate value g(x_m - x_j).
inline Eigen::Index translateIndex(Eigen::Index m, Eigen::Index j, Eigen::Index n) {
  Eigen::Index a = (m - j + n / 2) % n;
  return a < 0 ? a + n : a;
}

/// Visit the STFT row by row: callback(positionIndex, rowPointer) receives
/// V_g f(x_j, .) over the full dual grid. Streams without materializing the
/// whole matrix.
template <class Scalar, class RowFn>
void stftRows(const Signal<Scalar>& f, const Window<Scalar>& g, RowFn&& rowFn) {
  if (f.grid != g.grid()) throw std::invalid_argument("stft: signal and window grids differ");
  const Eigen::Index n = f.grid.n;
  CenteredDftPlan<Scalar> plan(n);
  std::vector<std::complex<Scalar>> h(n), row(n);
  const auto& gs = g.signal.samples;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index m = 0; m < n; ++m)
      h[m] = f.samples[m] * std::conj(gs[translateIndex(m, j, n)]);
    plan.run(h.data(), row.data(), f.grid.dx, true);
    rowFn(j, row.data());
  }
}

}  // namespace detail

/// V_g f(x, w) = <f, M_w T_x g> on the full grid x dual-grid lattice, with
/// periodic wrap of the window translate.
template <class Scalar>
StftMatrix<Scalar> stft(const Signal<Scalar>& f, const Window<Scalar>& g) {
  StftMatrix<Scalar> V{f.grid, f.grid.dual(), ComplexMatrix<Scalar>(f.grid.n, f.grid.n)};
  detail::stftRows(f, g, [&](Eigen::Index j, const std::complex<Scalar>* row) {
    for (Eigen::Index k = 0; k < f.grid.n; ++k) V.values(j, k) = row[k];
  });
  return V;
}

/// Inversion f = \int\int V_g f(x,w) M_w T_x g dx dw; requires a window with
/// the unit-normalization tag.
template <class Scalar>
Signal<Scalar> istft(const StftMatrix<Scalar>& V, const Window<Scalar>& g) {
  if (!g.unitL2) throw std::invalid_argument("istft: window must be unit normalized");
  if (V.positionGrid != g.grid())
    throw std::invalid_argument("istft: window grid does not match");
  const Eigen::Index n = V.positionGrid.n;
  if (V.values.rows() != n || V.values.cols() != n)
    throw std::invalid_argument("istft: matrix dimensions do not match grids");
  detail::CenteredDftPlan<Scalar> plan(n);
  std::vector<std::complex<Scalar>> row(n), w(n);
  Signal<Scalar> out(V.positionGrid);
  const Scalar dx = V.positionGrid.dx;
  const Scalar dxi = V.frequencyGrid.dx;
  const auto& gs = g.signal.samples;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) row[k] = V.values(j, k);
    plan.run(row.data(), w.data(), dxi, false);
    for (Eigen::Index m = 0; m < n; ++m)
      out.samples[m] += w[m] * gs[detail::translateIndex(m, j, n)] * dx;
  }
  return out;
}

/// Single Gabor coefficient <f, M_w T_x g> by direct quadrature; x may be off
/// the lattice when the window carries a closed form.
template <class Scalar>
std::complex<Scalar> gaborCoefficient(const Signal<Scalar>& f, const Window<Scalar>& g, Scalar x,
                                      Scalar w) {
  if (f.grid != g.grid()) throw std::invalid_argument("gaborCoefficient: grid mismatch");
  if (!f.grid.covers(x) || !f.grid.dual().covers(w))
    throw std::domain_error("gaborCoefficient: point outside grid coverage");
  const Eigen::Index n = f.grid.n;
  constexpr Scalar twoPi = Scalar(2) * Scalar(EIGEN_PI);
  std::complex<Scalar> acc(0, 0);
  const Scalar raw = x / f.grid.dx;
  const bool aligned = std::abs(raw - std::round(raw)) <= Scalar(1e-9);
  if (aligned) {
    const auto s = static_cast<Eigen::Index>(std::round(raw));
    for (Eigen::Index m = 0; m < n; ++m) {
      const std::complex<Scalar> win = g.signal.samples[detail::translateIndex(m, s + n / 2, n)];
      acc += f.samples[m] * std::conj(win * std::polar(Scalar(1), twoPi * w * f.grid.point(m)));
    }
  } else {
    if (!g.closedForm)
      throw std::domain_error("gaborCoefficient: off-lattice x needs a closed-form window");
    for (Eigen::Index m = 0; m < n; ++m) {
      const Scalar xm = f.grid.point(m);
      acc += f.samples[m] * std::conj(g.closedForm(xm - x) * std::polar(Scalar(1), twoPi * w * xm));
    }
  }
  return acc * f.grid.dx;
}

}  // namespace modspace
