#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "intpts/arith.hpp"
#include "intpts/poly.hpp"

namespace intpts {

/// Rational point of P^n in canonical form: primitive integer coordinates,
/// first nonzero coordinate positive. Equality is structural.
class ProjPoint {
 public:
  ProjPoint() = default;

  /// Normalizes any nonzero integer tuple; throws InvalidPoint on all zeros.
  static ProjPoint from_integers(std::vector<BigInt> raw);
  static ProjPoint from_rationals(std::span<const Rational> raw);

  std::size_t size() const { return coords_.size(); }
  /// n for a point of P^n.
  std::size_t dim() const { return coords_.size() - 1; }
  const std::vector<BigInt>& coords() const { return coords_; }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }

  /// max_j |x_j|
  BigInt height() const;

  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<BigInt> coords_;
};

ProjPoint normalize_point(std::span<const Rational> raw);

/// Nonzero homogeneous integer form with content 1 and a positive leading
/// (lex-largest) coefficient.
class HomForm {
 public:
  explicit HomForm(MPoly poly);

  /// The constant form 1; generator of the unit ideal.
  static HomForm unit(std::size_t nvars);

  std::size_t nvars() const { return poly_.nvars(); }
  unsigned degree() const { return degree_; }
  const MPoly& poly() const { return poly_; }
  bool is_unit() const { return degree_ == 0; }

  BigInt evaluate(std::span<const BigInt> values) const { return poly_.evaluate(values); }
  /// Sum of |coefficients|; bounds |g(x)| by max|x_j|^deg * this.
  BigInt coefficient_norm() const;

  std::string to_string() const;

  friend bool operator==(const HomForm& a, const HomForm& b) { return a.poly_ == b.poly_; }

 private:
  MPoly poly_;
  unsigned degree_ = 0;
};

BigInt evaluate_form(const HomForm& f, const ProjPoint& p);

using GeneratorSet = std::vector<HomForm>;

/// Finite union of closed subschemes of P^n, each given by generators of its
/// ideal. The empty set is the single unit component {1}.
class Subscheme {
 public:
  Subscheme(std::size_t nvars, std::vector<GeneratorSet> components,
            std::optional<unsigned> codimension = std::nullopt);

  static Subscheme empty(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<GeneratorSet>& components() const { return components_; }
  std::optional<unsigned> codimension() const { return codimension_; }
  bool is_empty_set() const;

  /// Set-theoretic union by concatenating components; unit components drop out.
  Subscheme unite(const Subscheme& other) const;

  /// True iff every generator of some component vanishes at p.
  bool contains(const ProjPoint& p) const;

  /// Sum of generator degrees; meaningful for divisors (one generator per component).
  unsigned divisor_degree() const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::vector<GeneratorSet> components_;
  std::optional<unsigned> codimension_;
};

/// Ideal of a point, generated by the nonzero 2x2 minors x_i T_j - x_j T_i.
Subscheme point_ideal(const ProjPoint& t);

/// One component per distinct point.
Subscheme points_subscheme(std::span<const ProjPoint> points);

/// A place of Q: a prime p or the archimedean place.
class Place {
 public:
  static Place arch() { return Place(); }
  /// Throws PreconditionFailed when p is not prime.
  static Place finite(const BigInt& p);

  bool is_arch() const { return !prime_.has_value(); }
  bool is_finite() const { return prime_.has_value(); }
  const BigInt& prime() const { return *prime_; }

  std::string to_string() const { return is_arch() ? "inf" : prime_->get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  /// Finite places by prime, archimedean last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  explicit Place(BigInt p) : prime_(std::move(p)) {}
  std::optional<BigInt> prime_;
};

using PlaceSet = std::set<Place>;

std::set<BigInt> finite_primes(const PlaceSet& places);

/// Residue coordinates of a point modulo m.
struct ModPoint {
  BigInt modulus;
  std::vector<BigInt> residues;

  friend bool operator==(const ModPoint& a, const ModPoint& b) {
    return a.modulus == b.modulus && a.residues == b.residues;
  }
};

ModPoint reduce_point(const ProjPoint& p, const BigInt& m);

}  // namespace intpts
