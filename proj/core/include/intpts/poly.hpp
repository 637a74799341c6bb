#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intpts/arith.hpp"

namespace intpts {

using Exponents = std::vector<unsigned>;

/// Lexicographically descending, so x0 terms lead.
struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

/// Sparse multivariate polynomial with integer coefficients.
class MPoly {
 public:
  using Terms = std::map<Exponents, BigInt, LexGreater>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const BigInt& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const BigInt& coeff);

  /// Degree of every term if they agree; nullopt for the zero polynomial or
  /// a non-homogeneous one.
  std::optional<unsigned> homogeneous_degree() const;
  unsigned total_degree() const;

  BigInt evaluate(std::span<const BigInt> values) const;
  BigInt content() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly pow(unsigned e) const;
  MPoly scaled(const BigInt& c) const;
  MPoly divided_exact(const BigInt& c) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  bool has_integer_coefficients() const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& c) const;
  QPoly pow(unsigned e) const;

  /// Euclidean division; divisor nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  friend QPoly operator/(const QPoly& a, const QPoly& b);
  friend QPoly operator%(const QPoly& a, const QPoly& b);

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Element of Q(t), kept reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(QPoly::constant(1)) {}
  RatFunc(QPoly num);
  RatFunc(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// nullopt at a pole.
  std::optional<Rational> evaluate(const Rational& t) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void reduce();
  QPoly num_;
  QPoly den_;
};

/// Integer 2x2 parameter change (s, t) = (a u + b w, c u + d w).
struct ParamChange {
  BigInt a, b, c, d;
  BigInt determinant() const { return a * d - b * c; }
};

/// Binary form of fixed degree d in (s, t) over Z; coeff(i) multiplies s^(d-i) t^i.
/// The zero form keeps its nominal degree so pullbacks can record it.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(unsigned degree);
  BinaryForm(unsigned degree, std::vector<BigInt> coeffs);

  static BinaryForm s();
  static BinaryForm t();
  static BinaryForm constant(const BigInt& c);

  unsigned degree() const { return degree_; }
  bool is_zero() const;
  const BigInt& coeff(unsigned i) const { return coeffs_[i]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& s, const BigInt& t) const;
  BigInt content() const;
  /// Content removed, first nonzero coefficient positive.
  BinaryForm primitive() const;

  /// Multiplicity of the root (1:0), i.e. number of leading zero coefficients.
  unsigned multiplicity_at_infinity() const;
  /// f(s, 1) as a polynomial in s.
  QPoly dehomogenize() const;
  /// Degree-d homogenization of p(s), scaled to a primitive integer form.
  static BinaryForm homogenize(const QPoly& p, unsigned degree);

  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm scaled(const BigInt& c) const;
  BinaryForm pow(unsigned e) const;
  BinaryForm derivative_s() const;
  BinaryForm derivative_t() const;

  /// Composition with a parameter change.
  BinaryForm substitute(const ParamChange& m) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  unsigned degree_ = 0;
  std::vector<BigInt> coeffs_{BigInt(0)};
};

/// Primitive gcd of two binary forms over Q (either may be zero, not both).
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

/// a / b over Q, rescaled to a primitive integer form; b must divide a.
BinaryForm exact_quotient(const BinaryForm& a, const BinaryForm& b);

/// Product of the distinct irreducible factors of a nonzero form.
BinaryForm squarefree_part(const BinaryForm& f);

/// Evaluates an integer polynomial in (n) variables at binary forms of a common degree.
BinaryForm compose(const MPoly& g, const std::vector<BinaryForm>& forms);

}  // namespace intpts
