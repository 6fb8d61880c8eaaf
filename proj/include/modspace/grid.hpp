#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace modspace {

template <class Scalar>
using ComplexVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;
template <class Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using RealVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

/// Uniform periodic grid on [-L/2, L/2) with n samples, n a power of two.
/// The dual grid carries the frequencies [-1/(2 dx), 1/(2 dx)) with spacing
/// 1/L, so dx * dxi * n = 1 and both grids are centered at zero.
template <class Scalar>
struct Grid1D {
  Eigen::Index n = 0;
  Scalar dx = Scalar(0);

  Scalar extent() const { return dx * Scalar(n); }
  Scalar dualSpacing() const { return Scalar(1) / extent(); }
  Grid1D dual() const { return Grid1D{n, dualSpacing()}; }

  Scalar point(Eigen::Index i) const { return (Scalar(i) - Scalar(n) / 2) * dx; }

  RealVector<Scalar> points() const {
    RealVector<Scalar> x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = point(i);
    return x;
  }

  /// Index of the sample at position value v (must be lattice aligned).
  Eigen::Index indexOf(Scalar v, Scalar tol = Scalar(1e-9)) const {
    const Scalar raw = v / dx + Scalar(n) / 2;
    const Scalar rounded = std::round(raw);
    if (std::abs(raw - rounded) > tol)
      throw std::domain_error("Grid1D: point is not lattice aligned");
    auto i = static_cast<Eigen::Index>(rounded);
    i %= n;
    if (i < 0) i += n;
    return i;
  }

  bool covers(Scalar v) const { return v >= -extent() / 2 && v < extent() / 2; }

  friend bool operator==(const Grid1D& a, const Grid1D& b) {
    return a.n == b.n && a.dx == b.dx;
  }
  friend bool operator!=(const Grid1D& a, const Grid1D& b) { return !(a == b); }
};

inline bool isPowerOfTwo(Eigen::Index n) { return n >= 1 && (n & (n - 1)) == 0; }

template <class Scalar>
Grid1D<Scalar> makeGrid(Eigen::Index n, Scalar extent) {
  if (n < 2 || !isPowerOfTwo(n))
    throw std::invalid_argument("makeGrid: sample count must be a power of two >= 2");
  if (!(extent > Scalar(0))) throw std::invalid_argument("makeGrid: extent must be positive");
  return Grid1D<Scalar>{n, extent / Scalar(n)};
}

/// Complex-valued samples of a function on a Grid1D.
template <class Scalar>
struct Signal {
  Grid1D<Scalar> grid;
  ComplexVector<Scalar> samples;

  Signal() = default;
  explicit Signal(const Grid1D<Scalar>& g) : grid(g), samples(ComplexVector<Scalar>::Zero(g.n)) {}
  Signal(const Grid1D<Scalar>& g, ComplexVector<Scalar> s) : grid(g), samples(std::move(s)) {
    if (samples.size() != grid.n)
      throw std::invalid_argument("Signal: sample count does not match grid");
  }
};

/// Sample a callable f(x) on a grid.
template <class Scalar, class F>
Signal<Scalar> sampled(const Grid1D<Scalar>& grid, F&& f) {
  Signal<Scalar> s(grid);
  for (Eigen::Index i = 0; i < grid.n; ++i) s.samples[i] = f(grid.point(i));
  return s;
}

/// <f, g> = sum f(x_k) conj(g(x_k)) dx, conjugate linear in the second slot.
template <class Scalar>
std::complex<Scalar> inner(const Signal<Scalar>& f, const Signal<Scalar>& g) {
  if (f.grid != g.grid) throw std::invalid_argument("inner: grid mismatch");
  return f.samples.dot(g.samples) * f.grid.dx;  // Eigen's dot conjugates the *first* arg
}

template <class Scalar>
Scalar l2Norm(const Signal<Scalar>& f) {
  return f.samples.norm() * std::sqrt(f.grid.dx);
}

namespace detail {

/// Centered DFT with quadrature weight: out_j = w * sum_k in_k e^{-s 2pi i x_k xi_j},
/// s = +1 forward / -1 inverse, on centered index ranges. Uses the identity
/// x_k xi_j = kj/n - (k+j)/2 + n/4 to reduce to a standard FFT with (-1)^k
/// twiddles and a global phase (-1)^{n/2}.
template <class Scalar>
void centeredDft(const std::complex<Scalar>* in, std::complex<Scalar>* out, Eigen::Index n,
                 Scalar weight, bool forward) {
  std::vector<std::complex<Scalar>> a(n), b(n);
  for (Eigen::Index k = 0; k < n; ++k) a[k] = (k & 1) ? -in[k] : in[k];
  Eigen::FFT<Scalar> fft;
  if (forward)
    fft.fwd(b, a);
  else {
    fft.inv(b, a);
    weight *= Scalar(n);  // undo Eigen's 1/n scaling: we carry the quadrature weight
  }
  const Scalar global = (n % 4 == 2) ? Scalar(-1) : Scalar(1);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Scalar sign = (j & 1) ? -global : global;
    out[j] = b[j] * (sign * weight);
  }
}

}  // namespace detail

/// Fourier transform F f(xi) = \int f(x) e^{-2pi i x xi} dx, realized as the
/// dx-weighted centered DFT. The result lives on the dual grid.
template <class Scalar>
Signal<Scalar> fourier(const Signal<Scalar>& f) {
  Signal<Scalar> out(f.grid.dual());
  detail::centeredDft(f.samples.data(), out.samples.data(), f.grid.n, f.grid.dx, true);
  return out;
}

/// Inverse transform with the +2pi i kernel and the grid spacing as weight.
template <class Scalar>
Signal<Scalar> inverseFourier(const Signal<Scalar>& f) {
  Signal<Scalar> out(f.grid.dual());
  detail::centeredDft(f.samples.data(), out.samples.data(), f.grid.n, f.grid.dx, false);
  return out;
}

/// Parity flip f(x) -> f(-x) on the centered periodic grid.
template <class Scalar>
Signal<Scalar> parityFlip(const Signal<Scalar>& f) {
  Signal<Scalar> out(f.grid);
  const Eigen::Index n = f.grid.n;
  for (Eigen::Index i = 0; i < n; ++i) out.samples[(n - i) % n] = f.samples[i];
  return out;
}

/// Periodic translate T_x f = f(. - x) for a lattice-aligned shift x.
template <class Scalar>
Signal<Scalar> translate(const Signal<Scalar>& f, Scalar x) {
  const Eigen::Index n = f.grid.n;
  const Scalar raw = x / f.grid.dx;
  const Scalar rounded = std::round(raw);
  if (std::abs(raw - rounded) > Scalar(1e-9))
    throw std::domain_error("translate: shift is not lattice aligned");
  auto s = static_cast<Eigen::Index>(rounded);
  Signal<Scalar> out(f.grid);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index j = (i - s) % n;
    if (j < 0) j += n;
    out.samples[i] = f.samples[j];
  }
  return out;
}

/// Modulation M_w f = e^{2pi i w x} f(x); w need not be lattice aligned.
template <class Scalar>
Signal<Scalar> modulate(const Signal<Scalar>& f, Scalar w) {
  Signal<Scalar> out(f.grid);
  constexpr Scalar twoPi = Scalar(2) * Scalar(EIGEN_PI);
  for (Eigen::Index i = 0; i < f.grid.n; ++i)
    out.samples[i] = f.samples[i] * std::polar(Scalar(1), twoPi * w * f.grid.point(i));
  return out;
}

}  // namespace modspace
