#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intpts/arith.hpp"
#include "intpts/poly.hpp"
#include "intpts/projgeom.hpp"
#include "intpts/weil.hpp"

namespace intpts {

/// Rational map P^1 -> P^n given by binary forms of a common degree with no
/// common factor and no common integer content.
class CurveMap {
 public:
  explicit CurveMap(std::vector<BinaryForm> forms);

  /// The line s*P + t*Q.
  static CurveMap line(const ProjPoint& p, const ProjPoint& q);
  static CurveMap identity();

  std::size_t nvars() const { return forms_.size(); }
  unsigned degree() const { return forms_.front().degree(); }
  const std::vector<BinaryForm>& forms() const { return forms_; }

  ProjPoint at(const BigInt& s, const BigInt& t) const;
  ProjPoint at(const ProjPoint& param) const;

  /// phi o M; M must be invertible.
  CurveMap reparametrize(const ParamChange& m) const;

  std::string to_string() const;

  friend bool operator==(const CurveMap& a, const CurveMap& b) { return a.forms_ == b.forms_; }

 private:
  std::vector<BinaryForm> forms_;
};

enum class PunctureCount { Zero, One, Two, Many };

std::string_view to_string(PunctureCount c);

/// Places of the curve lying on a subscheme, counted over the algebraic closure.
struct PunctureData {
  PunctureCount count = PunctureCount::Zero;
  /// Exact parameters of the punctures when count is One or Two and they are rational.
  std::vector<ProjPoint> rational;
  bool all_rational = true;
  /// Squarefree binary form whose roots are the punctures.
  BinaryForm witness = BinaryForm::constant(1);
  /// The whole curve lies in some component.
  bool contained = false;
};

/// Each generator of each component composed with phi; zero forms kept.
std::vector<std::vector<BinaryForm>> pullback(const Subscheme& d, const CurveMap& phi);

PunctureData curve_meets(const Subscheme& d, const CurveMap& phi);

/// N = prod p^(e_p + c_p) over the primes carrying a finite level; c_p starts
/// at 1 and grows through escalate().
class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(const LevelVector& levels, const std::set<BigInt>& skip = {});

  const BigInt& value() const { return value_; }
  const std::map<BigInt, unsigned>& exponents() const { return exponents_; }
  /// Raises the power of p by one; adds p^1 when p was absent.
  void escalate(const BigInt& p);

 private:
  void recompute();
  std::map<BigInt, unsigned> exponents_;
  BigInt value_ = 1;
};

/// Requires phi(base) to pass the finite-place checks at the given levels.
Modulus choose_modulus(const Subscheme& d, const CurveMap& phi, const ProjPoint& base,
                       const LevelVector& levels);

struct EmittedPoint {
  ProjPoint point;
  /// Curve parameter (P^1 point) for genus-zero searches.
  std::optional<ProjPoint> parameter;
  /// k with point = embed(P0 + k R) for elliptic searches.
  std::optional<long> multiple;
  LevelVector levels;
  PlaceSet exempt;
  WeilReport report;
};

struct SearchResult {
  std::vector<EmittedPoint> points;
  bool exhausted = false;
  BigInt modulus = 1;
  unsigned escalations = 0;
  std::size_t candidates = 0;
};

/// Enumerates parameters (s0 + N a, t0 + N b) by height max(|a|,|b|) <= cap,
/// then lexicographically, and keeps the points that pass verify_point with S
/// empty. Throws IntersectsD or BaseNotIntegral.
SearchResult search_genus0(const CurveMap& phi, const Subscheme& d, const ProjPoint& base,
                           const LevelVector& levels, std::size_t want, std::size_t cap = 64);

enum class GroupKind { Additive, Multiplicative };

struct SIntegralResult {
  SearchResult search;
  GroupKind kind = GroupKind::Additive;
  /// Parameter change moving the punctures to (1:0) [and (0:1)].
  ParamChange change;
  CurveMap reparametrized = CurveMap::identity();
  /// S-unit generating the multiplicative candidates.
  std::optional<BigInt> unit;
  /// Step between consecutive candidates: N for G_a, the unit exponent r for G_m.
  BigInt step = 1;
};

/// Generates (L, S)-integral points on a curve meeting D' in one or two places,
/// L = D' u N, by translating (G_a) or multiplying by S-unit powers (G_m)
/// inside the congruence class of the base. Every candidate is re-verified.
SIntegralResult search_s_integral(const CurveMap& phi, const Subscheme& dprime,
                                  const Subscheme& n, const PlaceSet& s, const ProjPoint& base,
                                  const LevelVector& levels, std::size_t want,
                                  std::size_t cap = 64);

}  // namespace intpts
