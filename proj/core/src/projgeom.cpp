#include "intpts/projgeom.hpp"

#include <algorithm>
#include <sstream>

#include "intpts/error.hpp"

namespace intpts {

ProjPoint ProjPoint::from_integers(std::vector<BigInt> raw) {
  if (raw.empty()) throw Error(ErrorCode::InvalidPoint, "point with no coordinates");
  BigInt g = 0;
  for (const auto& x : raw) g = gcd(g, x);
  if (g == 0) throw Error(ErrorCode::InvalidPoint, "all coordinates are zero");
  for (const auto& x : raw) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  ProjPoint p;
  p.coords_ = std::move(raw);
  for (auto& x : p.coords_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return p;
}

ProjPoint ProjPoint::from_rationals(std::span<const Rational> raw) {
  BigInt den = 1;
  for (const auto& q : raw) den = lcm(den, q.get_den());
  std::vector<BigInt> ints;
  ints.reserve(raw.size());
  for (const auto& q : raw) {
    Rational scaled = q * den;
    ints.push_back(scaled.get_num());
  }
  return from_integers(std::move(ints));
}

ProjPoint normalize_point(std::span<const Rational> raw) { return ProjPoint::from_rationals(raw); }

BigInt ProjPoint::height() const {
  BigInt h = 0;
  for (const auto& x : coords_) h = std::max(h, BigInt(abs(x)));
  return h;
}

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + "]";
}

// ---------------------------------------------------------------- HomForm

HomForm::HomForm(MPoly poly) : poly_(std::move(poly)) {
  auto deg = poly_.homogeneous_degree();
  if (poly_.is_zero()) throw Error(ErrorCode::InvalidForm, "zero form");
  if (!deg) throw Error(ErrorCode::InvalidForm, "form is not homogeneous: " +
                                                    poly_.to_string({}));
  degree_ = *deg;
  BigInt c = poly_.content();
  if (poly_.terms().begin()->second < 0) c = -c;
  if (c != 1) poly_ = poly_.divided_exact(c);
}

HomForm HomForm::unit(std::size_t nvars) { return HomForm(MPoly::constant(nvars, 1)); }

BigInt HomForm::coefficient_norm() const {
  BigInt s = 0;
  for (const auto& [e, c] : poly_.terms()) s += abs(c);
  return s;
}

std::string HomForm::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars(); ++i) names.push_back("x" + std::to_string(i));
  return poly_.to_string(names);
}

BigInt evaluate_form(const HomForm& f, const ProjPoint& p) {
  if (f.nvars() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch, "form and point live in different spaces");
  }
  return f.evaluate(p.coords());
}

// ---------------------------------------------------------------- Subscheme

Subscheme::Subscheme(std::size_t nvars, std::vector<GeneratorSet> components,
                     std::optional<unsigned> codimension)
    : nvars_(nvars), components_(std::move(components)), codimension_(codimension) {
  if (components_.empty()) {
    throw Error(ErrorCode::InvalidForm, "subscheme needs at least one component");
  }
  for (const auto& comp : components_) {
    if (comp.empty()) throw Error(ErrorCode::InvalidForm, "component with no generators");
    for (const auto& g : comp) {
      if (g.nvars() != nvars_) {
        throw Error(ErrorCode::DimensionMismatch, "generator in wrong number of variables");
      }
    }
  }
  if (codimension_ && *codimension_ < 1) {
    throw Error(ErrorCode::InvalidForm, "declared codimension must be at least 1");
  }
}

Subscheme Subscheme::empty(std::size_t nvars) {
  return Subscheme(nvars, {GeneratorSet{HomForm::unit(nvars)}});
}

bool Subscheme::is_empty_set() const {
  return std::all_of(components_.begin(), components_.end(), [](const GeneratorSet& c) {
    return std::any_of(c.begin(), c.end(), [](const HomForm& g) { return g.is_unit(); });
  });
}

Subscheme Subscheme::unite(const Subscheme& other) const {
  if (other.nvars_ != nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "union of subschemes in different spaces");
  }
  if (other.is_empty_set()) return *this;
  if (is_empty_set()) return other;
  std::vector<GeneratorSet> comps = components_;
  comps.insert(comps.end(), other.components_.begin(), other.components_.end());
  std::optional<unsigned> codim;
  if (codimension_ && other.codimension_) codim = std::min(*codimension_, *other.codimension_);
  return Subscheme(nvars_, std::move(comps), codim);
}

bool Subscheme::contains(const ProjPoint& p) const {
  if (p.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "point in wrong space");
  return std::any_of(components_.begin(), components_.end(), [&](const GeneratorSet& comp) {
    return std::all_of(comp.begin(), comp.end(),
                       [&](const HomForm& g) { return g.evaluate(p.coords()) == 0; });
  });
}

unsigned Subscheme::divisor_degree() const {
  if (is_empty_set()) return 0;
  unsigned d = 0;
  for (const auto& comp : components_) {
    if (comp.size() != 1) {
      throw Error(ErrorCode::InvalidForm, "divisor components must have a single generator");
    }
    d += comp.front().degree();
  }
  return d;
}

std::string Subscheme::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << " | ";
    os << "{";
    for (std::size_t j = 0; j < components_[i].size(); ++j) {
      if (j) os << ", ";
      os << components_[i][j].to_string();
    }
    os << "}";
  }
  return os.str();
}

Subscheme point_ideal(const ProjPoint& t) {
  const std::size_t n = t.size();
  GeneratorSet gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t[i] == 0 && t[j] == 0) continue;
      MPoly minor = MPoly::variable(n, i).scaled(t[j]) - MPoly::variable(n, j).scaled(t[i]);
      HomForm g(std::move(minor));
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    }
  }
  if (gens.empty()) {
    // P^0: the point is everything; only reachable for a single coordinate.
    throw Error(ErrorCode::DimensionMismatch, "point ideal needs at least P^1");
  }
  return Subscheme(n, {std::move(gens)}, static_cast<unsigned>(n - 1));
}

Subscheme points_subscheme(std::span<const ProjPoint> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidForm, "empty point list");
  const std::size_t n = points.front().size();
  std::vector<ProjPoint> seen;
  std::vector<GeneratorSet> comps;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of mixed dimension");
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    seen.push_back(p);
    comps.push_back(point_ideal(p).components().front());
  }
  return Subscheme(n, std::move(comps), static_cast<unsigned>(n - 1));
}

// ---------------------------------------------------------------- Place

Place Place::finite(const BigInt& p) {
  if (!is_prime(p)) throw Error(ErrorCode::PreconditionFailed, p.get_str() + " is not prime");
  return Place(p);
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_arch()) return false;
  if (b.is_arch()) return true;
  return *a.prime_ < *b.prime_;
}

std::set<BigInt> finite_primes(const PlaceSet& places) {
  std::set<BigInt> out;
  for (const auto& v : places) {
    if (v.is_finite()) out.insert(v.prime());
  }
  return out;
}

ModPoint reduce_point(const ProjPoint& p, const BigInt& m) {
  if (m < 2) throw Error(ErrorCode::PreconditionFailed, "modulus must be at least 2");
  ModPoint out{m, {}};
  for (const auto& x : p.coords()) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    out.residues.push_back(r);
  }
  return out;
}

}  // namespace intpts
