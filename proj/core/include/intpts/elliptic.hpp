#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "intpts/arith.hpp"
#include "intpts/error.hpp"
#include "intpts/genus0.hpp"
#include "intpts/poly.hpp"
#include "intpts/projgeom.hpp"
#include "intpts/weil.hpp"

namespace intpts {

/// Rational point of an elliptic curve: the identity or an affine (x, y).
class EllPointQ {
 public:
  EllPointQ() = default;
  EllPointQ(Rational x, Rational y) : affine_(std::make_pair(std::move(x), std::move(y))) {}
  static EllPointQ identity() { return EllPointQ(); }

  bool is_identity() const { return !affine_.has_value(); }
  const Rational& x() const { return affine_->first; }
  const Rational& y() const { return affine_->second; }

  std::string to_string() const;

  friend bool operator==(const EllPointQ& a, const EllPointQ& b) { return a.affine_ == b.affine_; }

 private:
  std::optional<std::pair<Rational, Rational>> affine_;
};

/// y^2 = x^3 + A x + B over Z with nonzero discriminant.
class EllCurveQ {
 public:
  EllCurveQ(BigInt a, BigInt b);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  /// -16 (4A^3 + 27B^2)
  BigInt discriminant() const;
  bool contains(const EllPointQ& p) const;

  std::string to_string() const;

 private:
  BigInt a_, b_;
};

EllPointQ ell_neg(const EllPointQ& p);
EllPointQ ell_add(const EllCurveQ& e, const EllPointQ& p, const EllPointQ& q);
/// Double-and-add; negative n multiplies the inverse.
EllPointQ ell_mul(const EllCurveQ& e, long n, const EllPointQ& p);

struct TorsionCertificate {
  bool torsion = false;
  /// Least n <= 12 with nP = O, or 0 when none exists.
  unsigned order = 0;
  /// P, 2P, ..., 12P (stops at the identity when torsion).
  std::vector<EllPointQ> multiples;
};

/// Rational torsion has order at most 12, so twelve multiples decide it.
TorsionCertificate is_torsion(const EllCurveQ& e, const EllPointQ& p);

/// p must be an odd prime.
bool good_reduction(const EllCurveQ& e, const BigInt& p);

/// Least r >= 1 such that v_p(x(rR)) <= -2 e_p for every p^e_p || N, i.e. rR
/// lies in the e_p-th level of the formal group at each p. N must be odd and
/// supported on good-reduction primes (BadModulus otherwise).
BigInt order_mod(const EllCurveQ& e, const EllPointQ& r, const BigInt& n);

using Embedding = std::function<ProjPoint(const EllPointQ&)>;

/// (x : y : 1) with primitive integer coordinates; identity -> (0 : 1 : 0).
ProjPoint plane_cubic_embedding(const EllPointQ& p);

struct EllipticSearchResult {
  SearchResult search;
  /// Multiplier of R used to stay in the congruence class.
  BigInt r = 1;
  /// Odd good-reduction part of the level support, with escalation.
  BigInt modulus = 1;
};

/// Scans embed(P0 + m (rR)) for m = 1..max_multiple and keeps points passing
/// verify_point with S empty. Throws TorsionGenerator or BaseNotIntegral.
EllipticSearchResult search_elliptic(const EllCurveQ& e, const Embedding& embed,
                                     const Subscheme& d, const EllPointQ& p0,
                                     const EllPointQ& r, const LevelVector& levels,
                                     std::size_t want, std::size_t max_multiple = 200);

/// Elliptic surface y^2 = x^3 + A(t) x + B(t) with a marked section (x(t), y(t)).
class EllSurface {
 public:
  EllSurface(QPoly a, QPoly b, RatFunc x, RatFunc y);

  const QPoly& a() const { return a_; }
  const QPoly& b() const { return b_; }
  const RatFunc& x() const { return x_; }
  const RatFunc& y() const { return y_; }
  /// -16 (4A^3 + 27B^2) as a polynomial in t.
  QPoly discriminant() const;

  std::string to_string() const;

 private:
  QPoly a_, b_;
  RatFunc x_, y_;
};

struct Fiber {
  Rational t0;
  EllCurveQ curve;
  EllPointQ point;
  /// Scaling u with (A, B) -> (u^4 A, u^6 B), (x, y) -> (u^2 x, u^3 y).
  BigInt u = 1;
};

/// Throws SingularFiber or SectionPole.
Fiber specialize(const EllSurface& surf, const Rational& t0);

/// Section replaced by its n-th multiple over Q(t). Throws DegenerateSection
/// when a multiple of the section hits the identity.
EllSurface section_multiple(const EllSurface& surf, unsigned n);

/// Fixed levels for every fiber, or each fiber's section point minimal levels.
using LevelsPolicy = std::variant<LevelVector, std::monostate>;

struct FiberOutcome {
  Rational t0;
  std::optional<Fiber> fiber;
  std::optional<TorsionCertificate> certificate;
  std::optional<LevelVector> levels;
  std::vector<EmittedPoint> points;
  bool exhausted = false;
  /// Set when the fiber was skipped.
  std::optional<ErrorCode> skipped;
  std::string diagnostic;
};

struct SweepOptions {
  std::size_t per_fiber = 5;
  std::size_t max_multiple = 200;
  /// Section multiplier; chosen by scan over 1..max_section_multiplier when absent.
  std::optional<unsigned> multiplier;
  unsigned max_section_multiplier = 24;
};

struct FiberSweepResult {
  unsigned multiplier = 1;
  std::vector<FiberOutcome> fibers;
};

/// Throws MeetsIdentitySection when D contains (0:1:0). Per-fiber failures
/// become diagnostics. Points are reported in the surface's (x : y : 1) frame.
FiberSweepResult fiber_sweep(const EllSurface& surf, const Subscheme& d,
                             const std::vector<Rational>& t_values, const LevelsPolicy& policy,
                             const SweepOptions& options = {});

}  // namespace intpts
