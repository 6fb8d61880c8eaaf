#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modspace/rational.hpp"

namespace modspace {

/// The six-exponent system (p,q) for the symbol class and (r1,r2) -> (t1,t2)
/// for the mapping property, stored as exact reciprocals, plus the optional
/// weight orders and dimension.
struct IndexTuple {
  Recip p, q, r1, r2, t1, t2;
  double s1 = 0, s2 = 0;
  int d = 1;
};

namespace detail {

inline Rational u(const Recip& x) { return x.value(); }
inline Rational uconj(const Recip& x) { return Rational(1) - x.value(); }

}  // namespace detail

/// Characterization for pseudodifferential operators (and FIOs with bounded
/// x-gradient oscillation): 1/r_i - 1/t_i >= 1 - 1/p - 1/q for i = 1,2 and
/// q <= min(t1, t2, r1', r2').
inline bool checkPseudo(const IndexTuple& t) {
  using namespace detail;
  const Rational rhs = Rational(1) - u(t.p) - u(t.q);
  const bool indices = (u(t.r1) - u(t.t1) >= rhs) && (u(t.r2) - u(t.t2) >= rhs);
  const bool qcond = u(t.q) >= u(t.t1) && u(t.q) >= u(t.t2) && u(t.q) >= uconj(t.r1) &&
                     u(t.q) >= uconj(t.r2);
  return indices && qcond;
}

/// Equal-index case M^r -> M^t: q <= min(t, r') and 1/r - 1/t >= 1 - 1/p - 1/q.
inline bool checkDiagonal(Recip p, Recip q, Recip r, Recip t) {
  using namespace detail;
  return u(q) >= u(t) && u(q) >= uconj(r) &&
         u(r) - u(t) >= Rational(1) - u(p) - u(q);
}

/// M^{r1,r2} -> M^{r2,r1} region for phases with nondegenerate x-Hessian:
/// r2 <= r1, q <= min(r2, r1'), 1/p + 1/q >= 1.
inline bool checkD2fix(Recip p, Recip q, Recip r1, Recip r2) {
  using namespace detail;
  return u(r2) >= u(r1) && u(q) >= u(r2) && u(q) >= uconj(r1) &&
         u(p) + u(q) >= Rational(1);
}

/// Toft's region: 1/r1 - 1/t1 = 1/r2 - 1/t2 = 1 - 1/p - 1/q and q <= t_i <= p.
inline bool checkToft(const IndexTuple& t) {
  using namespace detail;
  const Rational rhs = Rational(1) - u(t.p) - u(t.q);
  return u(t.r1) - u(t.t1) == rhs && u(t.r2) - u(t.t2) == rhs && u(t.q) >= u(t.t1) &&
         u(t.q) >= u(t.t2) && u(t.t1) >= u(t.p) && u(t.t2) >= u(t.p);
}

/// Schroedinger multiplier M^{r1,r2} -> M^{t1,t2}: bounded iff r_i <= t_i.
inline bool checkSchrodingerMultiplier(Recip r1, Recip r2, Recip t1, Recip t2) {
  using namespace detail;
  return u(r1) >= u(t1) && u(r2) >= u(t2);
}

/// Weighted symbol classes acting on M^{r1,r2}: one of
/// (i) r1 = r2, s1, s2 >= 0; (ii) r2 < r1, s1 > d(1/r2 - 1/r1), s2 >= 0;
/// (iii) r1 < r2, s1 >= 0, s2 > d(1/r1 - 1/r2). Weight thresholds are strict.
inline bool checkWeightedElefabio(Recip r1, Recip r2, double s1, double s2, int d) {
  using namespace detail;
  if (u(r1) == u(r2)) return s1 >= 0 && s2 >= 0;
  if (u(r2) > u(r1))  // r2 < r1
    return s1 > d * (u(r2) - u(r1)).toDouble() && s2 >= 0;
  return s1 >= 0 && s2 > d * (u(r1) - u(r2)).toDouble();
}

/// Weighted main theorem region: the index condition 1/r_i - 1/t_i >=
/// 1 - 1/p - 1/q together with alternative (i) or (ii). The equal-index
/// boundary (r1 = r2 resp. t1 = t2 with the weight merely >= 0) is included:
/// it is the unweighted equal-index estimate the alternatives interpolate
/// from.
inline bool checkWeightedMain(const IndexTuple& t) {
  using namespace detail;
  const Rational rhs = Rational(1) - u(t.p) - u(t.q);
  if (!((u(t.r1) - u(t.t1) >= rhs) && (u(t.r2) - u(t.t2) >= rhs))) return false;

  const Rational uq = u(t.q);
  const auto qLe = [&](const Rational& bound) { return uq >= bound; };

  // threshold helper: strict above the gap, or the degenerate equal case
  const auto aboveGap = [&](double s, const Rational& gap) {
    if (gap == Rational(0)) return s >= 0;
    return s > t.d * gap.toDouble();
  };

  bool ok = false;
  if (t.s2 >= 0) {
    const bool branchA = qLe(u(t.t1)) && qLe(u(t.t2)) && qLe(uconj(t.r1)) &&
                         u(t.r2) >= u(t.r1) && aboveGap(t.s1, u(t.r2) - u(t.r1));
    const bool branchB = qLe(u(t.t2)) && qLe(uconj(t.r1)) && qLe(uconj(t.r2)) &&
                         u(t.t2) >= u(t.t1) && aboveGap(t.s1, u(t.t2) - u(t.t1));
    ok = ok || branchA || branchB;
  }
  if (t.s1 >= 0) {
    const bool branchC = qLe(u(t.t1)) && qLe(u(t.t2)) && qLe(uconj(t.r2)) &&
                         u(t.r1) >= u(t.r2) && aboveGap(t.s2, u(t.r1) - u(t.r2));
    const bool branchD = qLe(u(t.t1)) && qLe(uconj(t.r1)) && qLe(uconj(t.r2)) &&
                         u(t.t1) >= u(t.t2) && aboveGap(t.s2, u(t.t1) - u(t.t2));
    ok = ok || branchC || branchD;
  }
  return ok;
}

/// Necessity region from the chirp-phase counterexample family:
/// 1/r1 - 1/t2 >= 1 - 1/p - 1/q, 1/r2 - 1/t2 >= 1 - 1/p - 1/q, and
/// q <= min(t1, t2, r1', r2').
inline bool checkNecessaryProp(const IndexTuple& t) {
  using namespace detail;
  const Rational rhs = Rational(1) - u(t.p) - u(t.q);
  return (u(t.r1) - u(t.t2) >= rhs) && (u(t.r2) - u(t.t2) >= rhs) && u(t.q) >= u(t.t1) &&
         u(t.q) >= u(t.t2) && u(t.q) >= uconj(t.r1) && u(t.q) >= uconj(t.r2);
}

enum class CheckerId {
  Pseudo,
  Diagonal,
  D2fix,
  Toft,
  SchrodingerMultiplier,
  WeightedElefabio,
  WeightedMain,
  NecessaryProp
};

inline CheckerId parseCheckerId(const std::string& name) {
  if (name == "pseudo") return CheckerId::Pseudo;
  if (name == "diagonal") return CheckerId::Diagonal;
  if (name == "d2fix") return CheckerId::D2fix;
  if (name == "toft") return CheckerId::Toft;
  if (name == "schrodinger-multiplier") return CheckerId::SchrodingerMultiplier;
  if (name == "weighted-elefabio") return CheckerId::WeightedElefabio;
  if (name == "weighted-main") return CheckerId::WeightedMain;
  if (name == "necessary") return CheckerId::NecessaryProp;
  throw std::invalid_argument("unknown checker '" + name + "'");
}

inline std::string checkerName(CheckerId id) {
  switch (id) {
    case CheckerId::Pseudo: return "pseudo";
    case CheckerId::Diagonal: return "diagonal";
    case CheckerId::D2fix: return "d2fix";
    case CheckerId::Toft: return "toft";
    case CheckerId::SchrodingerMultiplier: return "schrodinger-multiplier";
    case CheckerId::WeightedElefabio: return "weighted-elefabio";
    case CheckerId::WeightedMain: return "weighted-main";
    case CheckerId::NecessaryProp: return "necessary";
  }
  return "unknown";
}

inline bool evaluateChecker(CheckerId id, const IndexTuple& t) {
  switch (id) {
    case CheckerId::Pseudo: return checkPseudo(t);
    case CheckerId::Diagonal: return checkDiagonal(t.p, t.q, t.r1, t.t1);
    case CheckerId::D2fix: return checkD2fix(t.p, t.q, t.r1, t.r2);
    case CheckerId::Toft: return checkToft(t);
    case CheckerId::SchrodingerMultiplier:
      return checkSchrodingerMultiplier(t.r1, t.r2, t.t1, t.t2);
    case CheckerId::WeightedElefabio:
      return checkWeightedElefabio(t.r1, t.r2, t.s1, t.s2, t.d);
    case CheckerId::WeightedMain: return checkWeightedMain(t);
    case CheckerId::NecessaryProp: return checkNecessaryProp(t);
  }
  return false;
}

/// Coordinate order used by region scans: (1/p, 1/q, 1/r1, 1/r2, 1/t1, 1/t2).
inline constexpr std::array<const char*, 6> kCoordNames{"p", "q", "r1", "r2", "t1", "t2"};

inline int coordIndex(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == kCoordNames[i]) return i;
  throw std::invalid_argument("unknown exponent coordinate '" + name + "'");
}

/// Plane scan of an admissibility region on the exact lattice {0, 1/k, ..., 1}^2.
/// Coordinates other than the two free ones are fixed, tied (t_i = r_i), or
/// projected: existentially quantified over the same lattice.
struct RegionScanSpec {
  CheckerId checker = CheckerId::Pseudo;
  std::array<std::optional<Rational>, 6> fixed;
  int free1 = 0;
  int free2 = 1;
  bool tieTargets = false;  // substitute t1 = r1, t2 = r2
  int k = 64;
  double s1 = 0, s2 = 0;
  int d = 1;
};

struct RegionScanResult {
  RegionScanSpec spec;
  std::vector<std::vector<bool>> admissible;  // [i1][i2] for coords (i1/k, i2/k)
  long admissibleCount = 0;
  double areaFraction = 0;
};

inline RegionScanResult regionScan(const RegionScanSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("regionScan: resolution k must be >= 1");
  if (spec.free1 == spec.free2 || spec.free1 < 0 || spec.free1 > 5 || spec.free2 < 0 ||
      spec.free2 > 5)
    throw std::invalid_argument("regionScan: need exactly two distinct free coordinates");
  if (spec.fixed[spec.free1] || spec.fixed[spec.free2])
    throw std::invalid_argument("regionScan: a free coordinate cannot also be fixed");

  // Work out which coordinates are projected.
  std::vector<int> projected;
  for (int c = 0; c < 6; ++c) {
    if (c == spec.free1 || c == spec.free2 || spec.fixed[c]) continue;
    if (spec.tieTargets && c >= 4) continue;  // determined by r1/r2
    if (spec.tieTargets && (c == 2 || c == 3)) {
      // r_i tied to a free/fixed t_i is determined too
      const int tc = c + 2;
      if (tc == spec.free1 || tc == spec.free2 || spec.fixed[tc]) continue;
    }
    projected.push_back(c);
  }
  if (projected.size() > 2)
    throw std::invalid_argument("regionScan: more than two projected coordinates");

  const int k = spec.k;
  RegionScanResult result;
  result.spec = spec;
  result.admissible.assign(k + 1, std::vector<bool>(k + 1, false));

  std::array<Rational, 6> coord{};
  auto assign = [&](int c, const Rational& v) { coord[c] = v; };
  auto evaluate = [&]() {
    std::array<Rational, 6> c = coord;
    if (spec.tieTargets) {
      // tie in whichever direction is determined
      for (int i = 0; i < 2; ++i) {
        const int rc = 2 + i, tc = 4 + i;
        const bool tDriven = (tc == spec.free1 || tc == spec.free2 || spec.fixed[tc]);
        if (tDriven)
          c[rc] = c[tc];
        else
          c[tc] = c[rc];
      }
    }
    IndexTuple t{Recip(c[0]), Recip(c[1]), Recip(c[2]), Recip(c[3]), Recip(c[4]), Recip(c[5]),
                 spec.s1,     spec.s2,     spec.d};
    return evaluateChecker(spec.checker, t);
  };

  for (int c = 0; c < 6; ++c)
    if (spec.fixed[c]) assign(c, *spec.fixed[c]);

  for (int i1 = 0; i1 <= k; ++i1) {
    assign(spec.free1, Rational(i1, k));
    for (int i2 = 0; i2 <= k; ++i2) {
      assign(spec.free2, Rational(i2, k));
      bool ok = false;
      if (projected.empty()) {
        ok = evaluate();
      } else if (projected.size() == 1) {
        for (int a = 0; a <= k && !ok; ++a) {
          assign(projected[0], Rational(a, k));
          ok = evaluate();
        }
      } else {
        for (int a = 0; a <= k && !ok; ++a) {
          assign(projected[0], Rational(a, k));
          for (int b = 0; b <= k && !ok; ++b) {
            assign(projected[1], Rational(b, k));
            ok = evaluate();
          }
        }
      }
      result.admissible[i1][i2] = ok;
      if (ok) ++result.admissibleCount;
    }
  }
  result.areaFraction =
      static_cast<double>(result.admissibleCount) / (double(k + 1) * double(k + 1));
  return result;
}

/// The reciprocal test lattice {0, 1/4, 1/2, 3/4, 1} used by the exhaustive
/// invariant checks.
inline std::vector<Recip> quarterLattice() {
  return {Recip(0, 1), Recip(1, 4), Recip(1, 2), Recip(3, 4), Recip(1, 1)};
}

}  // namespace modspace
