#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace modspace {

enum class PhaseKind { KohnNirenberg, QuadraticChirp, SchrodingerFree, GeneralQuadratic, Custom };

inline std::string phaseKindName(PhaseKind k) {
  switch (k) {
    case PhaseKind::KohnNirenberg: return "kohn-nirenberg";
    case PhaseKind::QuadraticChirp: return "quadratic-chirp";
    case PhaseKind::SchrodingerFree: return "schrodinger-free";
    case PhaseKind::GeneralQuadratic: return "general-quadratic";
    case PhaseKind::Custom: return "custom";
  }
  return "unknown";
}

/// Coefficients of Phi(x,e) = qxx x^2/2 + qxe x e + qee e^2/2 + lx x + le e + c.
template <class Scalar>
struct QuadraticCoeffs {
  Scalar qxx = 0, qxe = 1, qee = 0, lx = 0, le = 0, c = 0;
};

/// A phase function with its first and second derivatives; d = 1 throughout.
template <class Scalar>
struct PhaseSpec {
  PhaseKind kind = PhaseKind::Custom;
  QuadraticCoeffs<Scalar> quad;  // meaningful when kind != Custom
  std::function<Scalar(Scalar, Scalar)> value, gradX, gradE, dxx, dxe, dee;

  bool isQuadratic() const { return kind != PhaseKind::Custom; }

  static PhaseSpec generalQuadratic(QuadraticCoeffs<Scalar> q,
                                    PhaseKind kind = PhaseKind::GeneralQuadratic) {
    PhaseSpec s;
    s.kind = kind;
    s.quad = q;
    s.value = [q](Scalar x, Scalar e) {
      return q.qxx * x * x / 2 + q.qxe * x * e + q.qee * e * e / 2 + q.lx * x + q.le * e + q.c;
    };
    s.gradX = [q](Scalar x, Scalar e) { return q.qxx * x + q.qxe * e + q.lx; };
    s.gradE = [q](Scalar x, Scalar e) { return q.qxe * x + q.qee * e + q.le; };
    s.dxx = [q](Scalar, Scalar) { return q.qxx; };
    s.dxe = [q](Scalar, Scalar) { return q.qxe; };
    s.dee = [q](Scalar, Scalar) { return q.qee; };
    return s;
  }

  /// Phi = x e: pseudodifferential operators in Kohn-Nirenberg form.
  static PhaseSpec kohnNirenberg() {
    return generalQuadratic({0, 1, 0, 0, 0, 0}, PhaseKind::KohnNirenberg);
  }
  /// Phi = x e + x^2/2: the chirp multiplier e^{i pi x^2}.
  static PhaseSpec quadraticChirp() {
    return generalQuadratic({1, 1, 0, 0, 0, 0}, PhaseKind::QuadraticChirp);
  }
  /// Phi = x e + e^2/2: the free-Schroedinger multiplier.
  static PhaseSpec schrodingerFree() {
    return generalQuadratic({0, 1, 1, 0, 0, 0}, PhaseKind::SchrodingerFree);
  }

  static PhaseSpec custom(std::function<Scalar(Scalar, Scalar)> value,
                          std::function<Scalar(Scalar, Scalar)> gradX,
                          std::function<Scalar(Scalar, Scalar)> gradE,
                          std::function<Scalar(Scalar, Scalar)> dxx,
                          std::function<Scalar(Scalar, Scalar)> dxe,
                          std::function<Scalar(Scalar, Scalar)> dee) {
    PhaseSpec s;
    s.kind = PhaseKind::Custom;
    s.value = std::move(value);
    s.gradX = std::move(gradX);
    s.gradE = std::move(gradE);
    s.dxx = std::move(dxx);
    s.dxe = std::move(dxe);
    s.dee = std::move(dee);
    return s;
  }
};

/// Working rectangle [xMin,xMax] x [eMin,eMax] on which phase conditions are
/// certified. A grid cannot certify global bounds, so reports carry it.
template <class Scalar>
struct Rect {
  Scalar xMin, xMax, eMin, eMax;
};

/// One structural condition: the measured witness and the resulting flag.
template <class Scalar>
struct ConditionCheck {
  bool holds = false;
  Scalar witness = 0;
};

template <class Scalar>
struct PhaseReport {
  Rect<Scalar> rect{};
  Scalar delta = 0;
  Scalar minMixedHessianAbs = 0;  // min |Phi_xe|; nondegeneracy witness
  Scalar secondDerivBound = 0;    // max |second derivatives|
  bool tame = false;              // minMixedHessianAbs >= delta and bound finite
  ConditionCheck<Scalar> boundedGradXVariation;  // sup_e osc_x grad_x Phi stays bounded
  ConditionCheck<Scalar> boundedGradEVariation;  // sup_x osc_e grad_e Phi stays bounded
  ConditionCheck<Scalar> hessXX;                 // min |Phi_xx| >= delta
  ConditionCheck<Scalar> hessEE;                 // min |Phi_ee| >= delta
};

namespace detail {

/// Oscillation of grad_x Phi in x (uniformly over e) on a sub-rectangle
/// scaled by `shrink` about the center.
template <class Scalar>
Scalar gradOscillation(const PhaseSpec<Scalar>& phase, const Rect<Scalar>& rect, bool inX,
                       Scalar shrink, int samples) {
  const Scalar cx = (rect.xMin + rect.xMax) / 2, hx = (rect.xMax - rect.xMin) / 2 * shrink;
  const Scalar ce = (rect.eMin + rect.eMax) / 2, he = (rect.eMax - rect.eMin) / 2 * shrink;
  Scalar worst = 0;
  for (int outer = 0; outer < samples; ++outer) {
    const Scalar tOuter = samples == 1 ? Scalar(0) : Scalar(-1) + Scalar(2 * outer) / (samples - 1);
    Scalar lo = std::numeric_limits<Scalar>::max(), hi = std::numeric_limits<Scalar>::lowest();
    for (int innerIdx = 0; innerIdx < samples; ++innerIdx) {
      const Scalar tInner =
          samples == 1 ? Scalar(0) : Scalar(-1) + Scalar(2 * innerIdx) / (samples - 1);
      const Scalar x = inX ? cx + hx * tInner : cx + hx * tOuter;
      const Scalar e = inX ? ce + he * tOuter : ce + he * tInner;
      const Scalar g = inX ? phase.gradX(x, e) : phase.gradE(x, e);
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

}  // namespace detail

/// Grid-sampled certification of the tame-phase conditions on a rectangle.
/// The bounded-gradient-variation flags compare the oscillation on the full
/// rectangle against the half rectangle: growth means the condition fails on
/// expanding domains (exact for quadratic phases).
template <class Scalar>
PhaseReport<Scalar> checkTame(const PhaseSpec<Scalar>& phase, const Rect<Scalar>& rect,
                              Scalar delta, int samplesPerAxis = 65) {
  if (!(delta > Scalar(0))) throw std::invalid_argument("checkTame: delta must be positive");
  PhaseReport<Scalar> rep;
  rep.rect = rect;
  rep.delta = delta;

  Scalar minXE = std::numeric_limits<Scalar>::max();
  Scalar minXX = std::numeric_limits<Scalar>::max();
  Scalar minEE = std::numeric_limits<Scalar>::max();
  Scalar maxSecond = 0;
  bool finite = true;
  for (int i = 0; i < samplesPerAxis; ++i)
    for (int j = 0; j < samplesPerAxis; ++j) {
      const Scalar x = rect.xMin + (rect.xMax - rect.xMin) * Scalar(i) / (samplesPerAxis - 1);
      const Scalar e = rect.eMin + (rect.eMax - rect.eMin) * Scalar(j) / (samplesPerAxis - 1);
      const Scalar axx = phase.dxx(x, e), axe = phase.dxe(x, e), aee = phase.dee(x, e);
      if (!std::isfinite(axx) || !std::isfinite(axe) || !std::isfinite(aee)) finite = false;
      minXE = std::min(minXE, std::abs(axe));
      minXX = std::min(minXX, std::abs(axx));
      minEE = std::min(minEE, std::abs(aee));
      maxSecond = std::max({maxSecond, std::abs(axx), std::abs(axe), std::abs(aee)});
    }
  rep.minMixedHessianAbs = minXE;
  rep.secondDerivBound = maxSecond;
  rep.tame = finite && minXE >= delta;
  rep.hessXX = {minXX >= delta, minXX};
  rep.hessEE = {minEE >= delta, minEE};

  const Scalar oscXFull = detail::gradOscillation(phase, rect, true, Scalar(1), samplesPerAxis);
  const Scalar oscXHalf = detail::gradOscillation(phase, rect, true, Scalar(0.5), samplesPerAxis);
  const Scalar oscEFull = detail::gradOscillation(phase, rect, false, Scalar(1), samplesPerAxis);
  const Scalar oscEHalf = detail::gradOscillation(phase, rect, false, Scalar(0.5), samplesPerAxis);
  const Scalar tol = Scalar(1e-9);
  rep.boundedGradXVariation = {oscXFull <= oscXHalf + tol * (1 + oscXHalf), oscXFull};
  rep.boundedGradEVariation = {oscEFull <= oscEHalf + tol * (1 + oscEHalf), oscEFull};
  return rep;
}

namespace detail {

/// Nodes and weights of the 16-point Gauss-Legendre rule on [0,1], computed
/// once by Newton iteration on the Legendre polynomial.
template <class Scalar>
const std::array<std::pair<Scalar, Scalar>, 16>& gaussLegendre01() {
  static const std::array<std::pair<Scalar, Scalar>, 16> rule = [] {
    std::array<std::pair<Scalar, Scalar>, 16> r{};
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      // initial guess on [-1,1]
      double t = std::cos(EIGEN_PI * (i + 0.75) / (n + 0.5));
      double pp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = 0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
        }
        pp = n * (t * p0 - p1) / (t * t - 1);
        const double dt = p0 / pp;
        t -= dt;
        if (std::abs(dt) < 1e-16) break;
      }
      const double w = 2.0 / ((1 - t * t) * pp * pp);
      r[i] = {Scalar((t + 1) / 2), Scalar(w / 2)};  // map to [0,1]
    }
    return r;
  }();
  return rule;
}

}  // namespace detail

/// Second-order Taylor remainder phase
///   Phi_{2,z}(zeta) = 2 sum_{|a|=2} int_0^1 (1-t) d^a Phi(z + t zeta) dt zeta^a / a!,
/// evaluated by 16-point Gauss-Legendre (exact for polynomial phases; closed
/// form for quadratics where it is z-independent).
template <class Scalar>
Scalar taylorRemainderPhase(const PhaseSpec<Scalar>& phase, Scalar zx, Scalar ze, Scalar zetaX,
                            Scalar zetaE) {
  if (phase.isQuadratic()) {
    const auto& q = phase.quad;
    return q.qxx * zetaX * zetaX / 2 + q.qxe * zetaX * zetaE + q.qee * zetaE * zetaE / 2;
  }
  Scalar ixx = 0, ixe = 0, iee = 0;
  for (const auto& [t, w] : detail::gaussLegendre01<Scalar>()) {
    const Scalar x = zx + t * zetaX, e = ze + t * zetaE;
    const Scalar f = w * (1 - t);
    ixx += f * phase.dxx(x, e);
    ixe += f * phase.dxe(x, e);
    iee += f * phase.dee(x, e);
  }
  return 2 * (ixx * zetaX * zetaX / 2 + ixe * zetaX * zetaE + iee * zetaE * zetaE / 2);
}

}  // namespace modspace
