#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "modspace/grid.hpp"
#include "modspace/rational.hpp"

namespace modspace {

/// amplitude * e^{-pi z |x|^2} with z = a + ib, a > 0; d is the dimension
/// the closed forms are evaluated in (sampling is 1-D only).
template <class Scalar>
struct ChirpedGaussian {
  std::complex<Scalar> amplitude{1, 0};
  std::complex<Scalar> z{1, 0};
  int d = 1;

  ChirpedGaussian(std::complex<Scalar> amplitude_, std::complex<Scalar> z_, int d_ = 1)
      : amplitude(amplitude_), z(z_), d(d_) {
    if (!(z.real() > Scalar(0)))
      throw std::domain_error("ChirpedGaussian: Re z must be positive");
    if (d < 1) throw std::domain_error("ChirpedGaussian: dimension must be >= 1");
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()))
      throw std::domain_error("ChirpedGaussian: amplitude must be finite");
  }

  std::complex<Scalar> evaluate(Scalar x) const {
    return amplitude * std::exp(-Scalar(EIGEN_PI) * z * x * x);
  }
};

template <class Scalar>
Signal<Scalar> sample(const ChirpedGaussian<Scalar>& g, const Grid1D<Scalar>& grid) {
  if (g.d != 1) throw std::domain_error("sample: only d = 1 is sampled numerically");
  return sampled(grid, [&](Scalar x) { return g.evaluate(x); });
}

/// Right-hand side of the chirped-Gaussian modulation norm equivalence
///   ||h_{a+ib}||_{M^{p,q}} ~ ((a+1)^2+b^2)^{(d/2)(1/p-1/2)}
///                            / ( a^{d/(2q)} (a(a+1)+b^2)^{(d/2)(1/p-1/q)} ).
/// Exposed exactly as written; comparisons against numerics go through
/// slopes or bounded ratios, never equality.
template <class Scalar>
Scalar chirpedGaussianNormAsymptotic(Scalar a, Scalar b, int d, Recip p, Recip q) {
  if (!(a > Scalar(0))) throw std::domain_error("chirpedGaussianNormAsymptotic: need a > 0");
  const Scalar up = Scalar(p.value().toDouble());
  const Scalar uq = Scalar(q.value().toDouble());
  const Scalar D = (a + 1) * (a + 1) + b * b;
  const Scalar alpha = a * (a + 1) + b * b;
  const Scalar dd = Scalar(d);
  return std::pow(D, dd / 2 * (up - Scalar(0.5))) /
         (std::pow(a, dd * uq / 2) * std::pow(alpha, dd / 2 * (up - uq)));
}

/// Dilated-Gaussian norm law ||phi_lambda||_{M^{p,q}} ~ lambda^{-d/p} (1+lambda)^{d(1/p+1/q-1)}.
template <class Scalar>
Scalar dilatedGaussianNormAsymptotic(Scalar lambda, int d, Recip p, Recip q) {
  if (!(lambda > Scalar(0))) throw std::domain_error("dilatedGaussianNormAsymptotic: need lambda > 0");
  const Scalar up = Scalar(p.value().toDouble());
  const Scalar uq = Scalar(q.value().toDouble());
  const Scalar dd = Scalar(d);
  return std::pow(lambda, -dd * up) * std::pow(Scalar(1) + lambda, dd * (up + uq - 1));
}

/// Exact limit exponents of the dilation law: (-d/r1 as lambda -> 0,
/// -d/r2' as lambda -> inf), computed in rational arithmetic.
inline std::pair<double, double> dilatedGaussianLimitExponents(Recip r1, Recip r2, int d) {
  const Rational small = -Rational(d) * r1.value();
  const Rational large = -Rational(d) * (Rational(1) - r2.value());
  return {small.toDouble(), large.toDouble()};
}

/// Free-Schroedinger multiplier applied to phi_lambda:
///   T phi_lambda = (1 - i lambda^2)^{-d/2} e^{-pi lambda^2/(1-i lambda^2) |.|^2}.
/// The root uses the principal branch, which is continuous from lambda = 0
/// because Re(1 - i lambda^2) = 1 > 0.
template <class Scalar>
ChirpedGaussian<Scalar> schrodingerOnGaussian(Scalar lambda, int d) {
  if (!(lambda > Scalar(0))) throw std::domain_error("schrodingerOnGaussian: need lambda > 0");
  const std::complex<Scalar> w(Scalar(1), -lambda * lambda);
  const std::complex<Scalar> amplitude = std::exp(-Scalar(d) / 2 * std::log(w));
  const std::complex<Scalar> z = lambda * lambda / w;
  return ChirpedGaussian<Scalar>(amplitude, z, d);
}

/// F[A e^{-pi z |x|^2}] = A z^{-d/2} e^{-pi |xi|^2 / z}; Re z > 0 keeps the
/// principal root on the continuous branch.
template <class Scalar>
ChirpedGaussian<Scalar> gaussianFourier(const ChirpedGaussian<Scalar>& g) {
  const std::complex<Scalar> amplitude = g.amplitude * std::exp(-Scalar(g.d) / 2 * std::log(g.z));
  return ChirpedGaussian<Scalar>(amplitude, std::complex<Scalar>(1, 0) / g.z, g.d);
}

}  // namespace modspace
