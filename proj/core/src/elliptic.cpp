#include "intpts/elliptic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "intpts/error.hpp"

namespace intpts {

namespace {

constexpr unsigned kMaxEscalations = 32;

// Rational roots of a nonzero polynomial via the rational root theorem.
std::vector<Rational> rational_roots(const QPoly& poly) {
  std::vector<Rational> roots;
  if (poly.degree() <= 0) return roots;
  BigInt den = 1;
  for (const auto& c : poly.coeffs()) den = lcm(den, c.get_den());
  std::vector<BigInt> ints;
  for (const auto& c : poly.coeffs()) ints.push_back(Rational(c * den).get_num());
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const BigInt& a0 = ints[low];
  const BigInt& an = ints.back();
  for (const auto& p : divisors(factor(a0))) {
    for (const auto& q : divisors(factor(an))) {
      for (int sign : {1, -1}) {
        Rational cand(p * sign, q);
        cand.canonicalize();
        if (poly.evaluate(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Point of P^2 cut out by a component with two independent linear generators.
std::optional<ProjPoint> component_point(const GeneratorSet& comp) {
  std::vector<std::array<BigInt, 3>> rows;
  for (const auto& g : comp) {
    if (g.degree() != 1 || g.nvars() != 3) return std::nullopt;
    std::array<BigInt, 3> row{0, 0, 0};
    for (const auto& [e, c] : g.poly().terms()) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (e[i] == 1) row[i] = c;
      }
    }
    rows.push_back(row);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& r = rows[i];
      const auto& s = rows[j];
      std::vector<BigInt> cross{r[1] * s[2] - r[2] * s[1], r[2] * s[0] - r[0] * s[2],
                                r[0] * s[1] - r[1] * s[0]};
      if (cross[0] != 0 || cross[1] != 0 || cross[2] != 0) {
        return ProjPoint::from_integers(std::move(cross));
      }
    }
  }
  return std::nullopt;
}

ProjPoint surface_frame(const EllPointQ& p, const BigInt& u) {
  if (p.is_identity()) return ProjPoint::from_integers({BigInt(0), BigInt(1), BigInt(0)});
  const Rational u2(u * u), u3(u * u * u);
  std::vector<Rational> raw{p.x() / u2, p.y() / u3, Rational(1)};
  return ProjPoint::from_rationals(raw);
}

}  // namespace

// ---------------------------------------------------------------- curves

std::string EllPointQ::to_string() const {
  if (is_identity()) return "O";
  return "(" + x().get_str() + ", " + y().get_str() + ")";
}

EllCurveQ::EllCurveQ(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant() == 0) {
    throw Error(ErrorCode::SingularCurve, "singular Weierstrass equation " + to_string());
  }
}

BigInt EllCurveQ::discriminant() const { return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_); }

bool EllCurveQ::contains(const EllPointQ& p) const {
  if (p.is_identity()) return true;
  return p.y() * p.y() == p.x() * p.x() * p.x() + Rational(a_) * p.x() + Rational(b_);
}

std::string EllCurveQ::to_string() const {
  std::ostringstream os;
  os << "y^2 = x^3";
  if (a_ != 0) os << (a_ < 0 ? " - " : " + ") << BigInt(abs(a_)).get_str() << "*x";
  if (b_ != 0) os << (b_ < 0 ? " - " : " + ") << BigInt(abs(b_)).get_str();
  return os.str();
}

EllPointQ ell_neg(const EllPointQ& p) {
  if (p.is_identity()) return p;
  return EllPointQ(p.x(), -p.y());
}

EllPointQ ell_add(const EllCurveQ& e, const EllPointQ& p, const EllPointQ& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  Rational lambda;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return EllPointQ::identity();
    lambda = (3 * p.x() * p.x() + Rational(e.a())) / (2 * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = lambda * lambda - p.x() - q.x();
  Rational y3 = lambda * (p.x() - x3) - p.y();
  return EllPointQ(std::move(x3), std::move(y3));
}

EllPointQ ell_mul(const EllCurveQ& e, long n, const EllPointQ& p) {
  EllPointQ base = n < 0 ? ell_neg(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  EllPointQ acc = EllPointQ::identity();
  while (k > 0) {
    if (k & 1ul) acc = ell_add(e, acc, base);
    k >>= 1;
    if (k > 0) base = ell_add(e, base, base);
  }
  return acc;
}

TorsionCertificate is_torsion(const EllCurveQ& e, const EllPointQ& p) {
  if (!e.contains(p)) throw Error(ErrorCode::PreconditionFailed, "point is not on the curve");
  TorsionCertificate cert;
  EllPointQ acc = EllPointQ::identity();
  for (unsigned n = 1; n <= 12; ++n) {
    acc = ell_add(e, acc, p);
    cert.multiples.push_back(acc);
    if (acc.is_identity()) {
      cert.torsion = true;
      cert.order = n;
      break;
    }
  }
  return cert;
}

bool good_reduction(const EllCurveQ& e, const BigInt& p) {
  if (p == 2 || !is_prime(p)) {
    throw Error(ErrorCode::PreconditionFailed, "good_reduction needs an odd prime");
  }
  return !mpz_divisible_p(e.discriminant().get_mpz_t(), p.get_mpz_t());
}

BigInt order_mod(const EllCurveQ& e, const EllPointQ& r, const BigInt& n) {
  if (n == 1) return 1;
  if (n < 1) throw Error(ErrorCode::BadModulus, "modulus must be positive");
  if (r.is_identity()) throw Error(ErrorCode::TorsionGenerator, "generator is the identity");
  BigInt result = 1;
  for (const auto& [p, ep] : factor(n)) {
    if (p == 2) throw Error(ErrorCode::BadModulus, "even modulus");
    if (!good_reduction(e, p)) {
      throw Error(ErrorCode::BadModulus, "bad reduction at " + p.get_str());
    }
    // Hasse bound times the index of the e-th formal-group level.
    const BigInt limit = (p + 2 * sqrt(p) + 2) * ipow(p, ep - 1);
    EllPointQ acc = r;
    BigInt k = 1;
    while (true) {
      if (acc.is_identity()) {
        throw Error(ErrorCode::TorsionGenerator, "generator is torsion");
      }
      if (valuation(acc.x(), p) <= -2 * static_cast<long>(ep)) break;
      if (k > limit) throw std::logic_error("order_mod exceeded the Hasse bound");
      acc = ell_add(e, acc, r);
      ++k;
    }
    result = lcm(result, k);
  }
  return result;
}

ProjPoint plane_cubic_embedding(const EllPointQ& p) { return surface_frame(p, 1); }

EllipticSearchResult search_elliptic(const EllCurveQ& e, const Embedding& embed,
                                     const Subscheme& d, const EllPointQ& p0,
                                     const EllPointQ& r, const LevelVector& levels,
                                     std::size_t want, std::size_t max_multiple) {
  if (!e.contains(p0) || !e.contains(r)) {
    throw Error(ErrorCode::PreconditionFailed, "search points must lie on the curve");
  }
  if (is_torsion(e, r).torsion) {
    throw Error(ErrorCode::TorsionGenerator, "generator " + r.to_string() + " is torsion");
  }
  const ProjPoint base = embed(p0);
  if (!verify_point(d, base, levels, {}).pass) {
    throw Error(ErrorCode::BaseNotIntegral,
                "base point " + base.to_string() + " is not integral at the given levels");
  }

  std::set<BigInt> skip;
  for (const auto& [p, lvl] : levels.finite) {
    if (p == 2 || !good_reduction(e, p)) skip.insert(p);
  }
  Modulus modulus(levels, skip);

  EllipticSearchResult out;
  SearchResult& res = out.search;
  std::set<ProjPoint> tried;
  bool restart = true;
  while (restart && res.points.size() < want) {
    restart = false;
    out.r = order_mod(e, r, modulus.value());
    const EllPointQ step = ell_mul(e, out.r.get_si(), r);
    EllPointQ q = p0;
    for (std::size_t m = 1; m <= max_multiple; ++m) {
      q = ell_add(e, q, step);
      ProjPoint pt = embed(q);
      if (!tried.insert(pt).second) continue;
      ++res.candidates;
      WeilReport report = verify_point(d, pt, levels, {});
      if (report.pass) {
        const long k = static_cast<long>(m) * out.r.get_si();
        res.points.push_back(EmittedPoint{pt, std::nullopt, k, levels, {},
                                          std::move(report)});
        if (res.points.size() >= want) break;
        continue;
      }
      for (const auto& v : report.offending) {
        if (v.is_finite() && modulus.exponents().count(v.prime()) &&
            res.escalations < kMaxEscalations) {
          modulus.escalate(v.prime());
          ++res.escalations;
          restart = true;
          break;
        }
      }
      if (restart) break;
    }
  }
  out.modulus = modulus.value();
  res.modulus = modulus.value();
  res.exhausted = res.points.size() < want;
  return out;
}

// ---------------------------------------------------------------- surfaces

EllSurface::EllSurface(QPoly a, QPoly b, RatFunc x, RatFunc y)
    : a_(std::move(a)), b_(std::move(b)), x_(std::move(x)), y_(std::move(y)) {
  if (!a_.has_integer_coefficients() || !b_.has_integer_coefficients()) {
    throw Error(ErrorCode::InvalidForm, "A(t) and B(t) need integer coefficients");
  }
  if (discriminant().is_zero()) {
    throw Error(ErrorCode::SingularCurve, "generic fiber is singular");
  }
  RatFunc lhs = y_ * y_;
  RatFunc rhs = x_ * x_ * x_ + RatFunc(a_) * x_ + RatFunc(b_);
  if (!(lhs == rhs)) {
    throw Error(ErrorCode::PreconditionFailed, "section does not satisfy the Weierstrass equation");
  }
}

QPoly EllSurface::discriminant() const {
  return (a_.pow(3).scaled(4) + b_.pow(2).scaled(27)).scaled(-16);
}

std::string EllSurface::to_string() const {
  return "y^2 = x^3 + (" + a_.to_string() + ")*x + (" + b_.to_string() + "); section (" +
         x_.to_string() + ", " + y_.to_string() + ")";
}

Fiber specialize(const EllSurface& surf, const Rational& t0) {
  if (surf.discriminant().evaluate(t0) == 0) {
    throw Error(ErrorCode::SingularFiber, "singular fiber at t = " + t0.get_str());
  }
  auto x = surf.x().evaluate(t0);
  auto y = surf.y().evaluate(t0);
  if (!x || !y) throw Error(ErrorCode::SectionPole, "section has a pole at t = " + t0.get_str());
  const Rational a0 = surf.a().evaluate(t0);
  const Rational b0 = surf.b().evaluate(t0);
  const BigInt u = lcm(a0.get_den(), b0.get_den());
  const Rational u2(u * u), u3(u * u * u);
  Rational a_int = a0 * u2 * u2;
  Rational b_int = b0 * u3 * u3;
  Fiber f{t0, EllCurveQ(a_int.get_num(), b_int.get_num()), EllPointQ(*x * u2, *y * u3), u};
  return f;
}

EllSurface section_multiple(const EllSurface& surf, unsigned n) {
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "multiplier must be positive");
  if (n == 1) return surf;
  using Pt = std::optional<std::pair<RatFunc, RatFunc>>;
  const RatFunc a(surf.a());
  auto add = [&](const Pt& p, const Pt& q) -> Pt {
    if (!p) return q;
    if (!q) return p;
    const auto& [x1, y1] = *p;
    const auto& [x2, y2] = *q;
    RatFunc lambda;
    if (x1 == x2) {
      if ((y1 + y2).is_zero()) {
        throw Error(ErrorCode::DegenerateSection, "a multiple of the section is the identity");
      }
      lambda = (x1 * x1 * RatFunc(QPoly::constant(3)) + a) / (y1 * RatFunc(QPoly::constant(2)));
    } else {
      lambda = (y2 - y1) / (x2 - x1);
    }
    RatFunc x3 = lambda * lambda - x1 - x2;
    RatFunc y3 = lambda * (x1 - x3) - y1;
    return std::make_pair(x3, y3);
  };
  Pt acc;
  Pt base = std::make_pair(surf.x(), surf.y());
  unsigned k = n;
  while (k > 0) {
    if (k & 1u) acc = add(acc, base);
    k >>= 1;
    if (k > 0) base = add(base, base);
  }
  return EllSurface(surf.a(), surf.b(), acc->first, acc->second);
}

FiberSweepResult fiber_sweep(const EllSurface& surf, const Subscheme& d,
                             const std::vector<Rational>& t_values, const LevelsPolicy& policy,
                             const SweepOptions& options) {
  if (d.nvars() != 3) throw Error(ErrorCode::DimensionMismatch, "D must live in P^2");
  const ProjPoint identity = ProjPoint::from_integers({BigInt(0), BigInt(1), BigInt(0)});
  if (d.contains(identity)) {
    throw Error(ErrorCode::MeetsIdentitySection, "D contains the identity section (0:1:0)");
  }

  // Fibers meeting D: each D point (X, Y) lies on the fiber t iff
  // Y^2 - X^3 - A(t) X - B(t) = 0.
  std::vector<std::pair<Rational, ProjPoint>> hits;
  bool meets_every_fiber = false;
  if (!d.is_empty_set()) {
    for (const auto& comp : d.components()) {
      auto pt = component_point(comp);
      if (!pt) {
        throw Error(ErrorCode::PreconditionFailed, "D must be a finite set of points of P^2");
      }
      if ((*pt)[2] == 0) continue;
      const Rational x((*pt)[0], (*pt)[2]);
      const Rational y((*pt)[1], (*pt)[2]);
      Rational xc = x, yc = y;
      xc.canonicalize();
      yc.canonicalize();
      QPoly eq = QPoly::constant(yc * yc - xc * xc * xc) - surf.a().scaled(xc) - surf.b();
      if (eq.is_zero()) {
        meets_every_fiber = true;
        continue;
      }
      for (const auto& t : rational_roots(eq)) hits.emplace_back(t, *pt);
    }
  }

  FiberSweepResult out;
  if (options.multiplier) {
    out.multiplier = *options.multiplier;
  } else {
    out.multiplier = 0;
    for (unsigned n = 1; n <= options.max_section_multiplier && out.multiplier == 0; ++n) {
      bool clear = true;
      for (const auto& [t, pt] : hits) {
        try {
          Fiber f = specialize(surf, t);
          if (surface_frame(ell_mul(f.curve, n, f.point), f.u) == pt) clear = false;
        } catch (const Error&) {
          // singular fibers and poles are skipped during the sweep anyway
        }
        if (!clear) break;
      }
      if (clear) out.multiplier = n;
    }
    if (out.multiplier == 0) {
      throw Error(ErrorCode::PreconditionFailed, "no section multiple avoids D");
    }
  }
  const EllSurface section = section_multiple(surf, out.multiplier);

  for (const auto& t0 : t_values) {
    FiberOutcome fo;
    fo.t0 = t0;
    try {
      if (meets_every_fiber) {
        throw Error(ErrorCode::OnSubscheme, "a point of D lies on every fiber");
      }
      Fiber f = specialize(section, t0);
      fo.fiber = f;
      fo.certificate = is_torsion(f.curve, f.point);
      if (fo.certificate->torsion) {
        throw Error(ErrorCode::TorsionSpecialization,
                    "section specializes to a point of order " +
                        std::to_string(fo.certificate->order));
      }
      const BigInt u = f.u;
      Embedding embed = [u](const EllPointQ& p) { return surface_frame(p, u); };
      if (std::holds_alternative<LevelVector>(policy)) {
        fo.levels = std::get<LevelVector>(policy);
      } else {
        fo.levels = minimal_levels(d, embed(f.point));
      }
      EllipticSearchResult r = search_elliptic(f.curve, embed, d, f.point, f.point, *fo.levels,
                                               options.per_fiber, options.max_multiple);
      fo.points = std::move(r.search.points);
      fo.exhausted = r.search.exhausted;
    } catch (const Error& err) {
      fo.skipped = err.code();
      fo.diagnostic = err.what();
    }
    out.fibers.push_back(std::move(fo));
  }
  return out;
}

}  // namespace intpts
