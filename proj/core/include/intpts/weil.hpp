#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intpts/arith.hpp"
#include "intpts/projgeom.hpp"

namespace intpts {

/// Multiplicative local Weil value Lambda = exp(lambda) at one place.
///
/// The canonical representative used throughout is
///   Lambda_{D,v}(P) = max_components min_generators  max_j|x_j|_v^deg(g) / |g(x)|_v
/// on primitive coordinates x of P. At a prime p this is p^m with m >= 0.
struct WeilValue {
  Place place = Place::arch();
  bool infinite = false;
  /// m with value = p^m; finite places only.
  unsigned exponent = 0;
  Rational value = 1;

  static WeilValue infinity(const Place& v);
  static WeilValue at_prime(const BigInt& p, unsigned m);
  static WeilValue at_arch(const Rational& q);

  /// "p^m", an exact rational, or "infinity".
  std::string to_string() const;

  friend bool operator==(const WeilValue& a, const WeilValue& b) {
    return a.place == b.place && a.infinite == b.infinite && a.exponent == b.exponent &&
           a.value == b.value;
  }
};

/// Integrality bounds: Lambda_p <= p^{e_p} at listed primes, Lambda_p <= 1
/// elsewhere, Lambda_inf <= arch when present.
struct LevelVector {
  std::map<BigInt, unsigned> finite;
  std::optional<Rational> arch;

  unsigned level_at(const BigInt& p) const;
  /// Pointwise max; an absent arch level on either side stays absent only if
  /// both are absent.
  LevelVector merged_max(const LevelVector& other) const;
  std::string to_string() const;

  friend bool operator==(const LevelVector& a, const LevelVector& b) {
    return a.finite == b.finite && a.arch == b.arch;
  }
};

struct PlaceCheck {
  WeilValue value;
  /// Multiplicative bound the value was compared against (p^e or t_inf).
  std::optional<Rational> bound;
  bool exempt = false;
  bool within = true;
};

struct WeilReport {
  ProjPoint point;
  std::vector<PlaceCheck> places;
  bool pass = true;
  bool on_subscheme = false;
  std::vector<Place> offending;
  /// Composite left over when the factorizer gave up; the point fails then.
  std::optional<BigInt> unresolved_cofactor;
};

WeilValue local_weil(const Subscheme& d, const ProjPoint& p, const Place& v);

/// Primes p with Lambda_{D,p}(P) > 1. Throws OnSubscheme if P lies on D.
PlaceSet support_places(const Subscheme& d, const ProjPoint& p, const FactorOptions& options = {});

/// Smallest levels under which P is everywhere integral.
LevelVector minimal_levels(const Subscheme& d, const ProjPoint& p,
                           const FactorOptions& options = {});

/// Checks Lambda_{D,v}(P) <= level(v) at every v outside S. Throws
/// MissingArchLevel when the archimedean place is constrained but has no level.
/// Never factors more than the cofactor left after dividing out primes that
/// carry a level or sit in S.
WeilReport verify_point(const Subscheme& d, const ProjPoint& p, const LevelVector& levels,
                        const PlaceSet& s, const FactorOptions& options = {});

/// The four integrality notions evaluated on a finite sample.
struct Classification {
  /// Every finite-place value is 1.
  bool classical_total = true;
  /// Every finite-place value outside S is 1.
  bool classical_arch = true;
  /// Pointwise-max levels over the sample: everywhere-integralizable witness.
  LevelVector everywhere_witness;
  /// Same with the places of S dropped.
  LevelVector s_witness;
  /// Size of the witness's finite support after each prefix of the sample.
  std::vector<std::size_t> support_growth;
  /// Archimedean witness after each prefix.
  std::vector<Rational> arch_growth;
};

Classification classify_set(std::span<const ProjPoint> points, const Subscheme& d,
                            const PlaceSet& s, const FactorOptions& options = {});

/// Independent evaluation of Lambda_p for a finite point set via the raw 2x2
/// minors of the matrix with rows T and P; never touches HomForm.
WeilValue oracle_weil_points(std::span<const ProjPoint> targets, const ProjPoint& p,
                             const BigInt& prime);

}  // namespace intpts
