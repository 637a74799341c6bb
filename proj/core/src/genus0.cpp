#include "intpts/genus0.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "intpts/error.hpp"

namespace intpts {

namespace {

constexpr unsigned kMaxEscalations = 64;

// Coefficients of a quotient form over Q, before clearing denominators.
std::vector<Rational> quotient_coeffs(const BinaryForm& f, const BinaryForm& g) {
  const unsigned d = f.degree() - g.degree();
  std::vector<Rational> out(d + 1, Rational(0));
  if (f.is_zero()) return out;
  QPoly q, r;
  QPoly::divmod(f.dehomogenize(), g.dehomogenize(), q, r);
  if (!r.is_zero()) throw std::logic_error("common factor does not divide a form");
  for (unsigned i = 0; i <= d; ++i) out[i] = q.coeff(d - i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- CurveMap

CurveMap::CurveMap(std::vector<BinaryForm> forms) : forms_(std::move(forms)) {
  if (forms_.size() < 2) throw Error(ErrorCode::InvalidForm, "curve map needs at least 2 forms");
  const unsigned d = forms_.front().degree();
  bool any = false;
  for (const auto& f : forms_) {
    if (f.degree() != d) throw Error(ErrorCode::InvalidForm, "curve map forms differ in degree");
    any = any || !f.is_zero();
  }
  if (!any) throw Error(ErrorCode::InvalidForm, "curve map with all forms zero");

  std::optional<BinaryForm> common;
  for (const auto& f : forms_) {
    if (f.is_zero()) continue;
    common = common ? gcd(*common, f) : f.primitive();
  }
  if (common->degree() > 0) {
    std::vector<std::vector<Rational>> qs;
    BigInt den = 1;
    for (const auto& f : forms_) {
      qs.push_back(quotient_coeffs(f, *common));
      for (const auto& c : qs.back()) den = lcm(den, c.get_den());
    }
    const unsigned nd = d - common->degree();
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      std::vector<BigInt> coeffs;
      for (const auto& c : qs[i]) coeffs.push_back(Rational(c * den).get_num());
      forms_[i] = BinaryForm(nd, std::move(coeffs));
    }
  }
  BigInt content = 0;
  for (const auto& f : forms_) content = gcd(content, f.content());
  if (content != 1) {
    for (auto& f : forms_) {
      std::vector<BigInt> coeffs = f.coeffs();
      for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
      f = BinaryForm(f.degree(), std::move(coeffs));
    }
  }
}

CurveMap CurveMap::line(const ProjPoint& p, const ProjPoint& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "line endpoints");
  if (p == q) throw Error(ErrorCode::InvalidForm, "line through a repeated point");
  std::vector<BinaryForm> forms;
  for (std::size_t i = 0; i < p.size(); ++i) forms.emplace_back(1, std::vector<BigInt>{p[i], q[i]});
  return CurveMap(std::move(forms));
}

CurveMap CurveMap::identity() { return CurveMap({BinaryForm::s(), BinaryForm::t()}); }

ProjPoint CurveMap::at(const BigInt& s, const BigInt& t) const {
  std::vector<BigInt> raw;
  raw.reserve(forms_.size());
  for (const auto& f : forms_) raw.push_back(f.evaluate(s, t));
  return ProjPoint::from_integers(std::move(raw));
}

ProjPoint CurveMap::at(const ProjPoint& param) const {
  if (param.size() != 2) throw Error(ErrorCode::DimensionMismatch, "curve parameter must be in P^1");
  return at(param[0], param[1]);
}

CurveMap CurveMap::reparametrize(const ParamChange& m) const {
  if (m.determinant() == 0) throw Error(ErrorCode::PreconditionFailed, "singular parameter change");
  std::vector<BinaryForm> out;
  for (const auto& f : forms_) out.push_back(f.substitute(m));
  return CurveMap(std::move(out));
}

std::string CurveMap::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (i) out += " : ";
    out += forms_[i].to_string();
  }
  return out + "]";
}

std::string_view to_string(PunctureCount c) {
  switch (c) {
    case PunctureCount::Zero: return "0";
    case PunctureCount::One: return "1";
    case PunctureCount::Two: return "2";
    case PunctureCount::Many: return "many";
  }
  return "?";
}

// ---------------------------------------------------------------- punctures

std::vector<std::vector<BinaryForm>> pullback(const Subscheme& d, const CurveMap& phi) {
  if (d.nvars() != phi.nvars()) {
    throw Error(ErrorCode::DimensionMismatch, "subscheme and curve in different spaces");
  }
  std::vector<std::vector<BinaryForm>> out;
  for (const auto& comp : d.components()) {
    std::vector<BinaryForm> forms;
    for (const auto& g : comp) forms.push_back(compose(g.poly(), phi.forms()));
    out.push_back(std::move(forms));
  }
  return out;
}

PunctureData curve_meets(const Subscheme& d, const CurveMap& phi) {
  PunctureData out;
  BinaryForm product = BinaryForm::constant(1);
  for (const auto& forms : pullback(d, phi)) {
    std::optional<BinaryForm> g;
    for (const auto& f : forms) {
      if (f.is_zero()) continue;
      g = g ? gcd(*g, f) : f.primitive();
    }
    if (!g) {
      out.contained = true;
      continue;
    }
    if (g->degree() > 0) product = product * *g;
  }
  if (out.contained) {
    out.count = PunctureCount::Many;
    out.all_rational = false;
    return out;
  }
  if (product.degree() == 0) return out;

  BinaryForm sq = squarefree_part(product);
  out.witness = sq;
  const unsigned k = sq.degree();
  out.count = k == 1 ? PunctureCount::One : k == 2 ? PunctureCount::Two : PunctureCount::Many;
  if (k > 2) {
    out.all_rational = false;
    return out;
  }

  BinaryForm rest = sq;
  if (sq.multiplicity_at_infinity() > 0) {
    out.rational.push_back(ProjPoint::from_integers({BigInt(1), BigInt(0)}));
    rest = exact_quotient(sq, BinaryForm::t());
  }
  if (rest.degree() == 1) {
    // a s + b t = 0 at (s:t) = (-b : a)
    out.rational.push_back(ProjPoint::from_integers({BigInt(-rest.coeff(1)), rest.coeff(0)}));
  } else if (rest.degree() == 2) {
    // a s^2 + b s t + c t^2, a != 0 since (1:0) is not a root here
    const BigInt& a = rest.coeff(0);
    const BigInt& b = rest.coeff(1);
    const BigInt& c = rest.coeff(2);
    Rational root;
    if (rational_sqrt(Rational(b * b - 4 * a * c), root)) {
      for (int sign : {-1, 1}) {
        Rational s = (Rational(-b) + sign * root) / Rational(2 * a);
        std::vector<Rational> raw{s, Rational(1)};
        out.rational.push_back(ProjPoint::from_rationals(raw));
      }
    } else {
      out.all_rational = false;
    }
  }
  std::sort(out.rational.begin(), out.rational.end());
  return out;
}

// ---------------------------------------------------------------- Modulus

Modulus::Modulus(const LevelVector& levels, const std::set<BigInt>& skip) {
  for (const auto& [p, e] : levels.finite) {
    if (skip.count(p)) continue;
    exponents_[p] = e + 1;
  }
  recompute();
}

void Modulus::escalate(const BigInt& p) {
  ++exponents_[p];
  recompute();
}

void Modulus::recompute() {
  value_ = 1;
  for (const auto& [p, e] : exponents_) value_ *= ipow(p, e);
}

Modulus choose_modulus(const Subscheme& d, const CurveMap& phi, const ProjPoint& base,
                       const LevelVector& levels) {
  WeilReport r = verify_point(d, phi.at(base), levels, {Place::arch()});
  if (!r.pass) {
    throw Error(ErrorCode::BaseNotIntegral,
                "base point " + phi.at(base).to_string() + " violates the finite levels");
  }
  return Modulus(levels);
}

// ---------------------------------------------------------------- searches

namespace {

// Shell of parameter offsets with max(|a|,|b|) == h, lexicographic.
std::vector<std::pair<long, long>> shell(long h) {
  std::vector<std::pair<long, long>> out;
  if (h == 0) return {{0, 0}};
  for (long a = -h; a <= h; ++a) {
    if (a == -h || a == h) {
      for (long b = -h; b <= h; ++b) out.emplace_back(a, b);
    } else {
      out.emplace_back(a, -h);
      out.emplace_back(a, h);
    }
  }
  return out;
}

// First finite offender, if any.
std::optional<BigInt> finite_offender(const WeilReport& r) {
  for (const auto& v : r.offending) {
    if (v.is_finite()) return v.prime();
  }
  return std::nullopt;
}

}  // namespace

SearchResult search_genus0(const CurveMap& phi, const Subscheme& d, const ProjPoint& base,
                           const LevelVector& levels, std::size_t want, std::size_t cap) {
  if (base.size() != 2) throw Error(ErrorCode::DimensionMismatch, "base parameter must be in P^1");
  PunctureData meets = curve_meets(d, phi);
  if (meets.count != PunctureCount::Zero) {
    throw Error(ErrorCode::IntersectsD, "curve meets the subscheme in " +
                                            std::string(to_string(meets.count)) + " place(s)");
  }
  const ProjPoint base_point = phi.at(base);
  if (!verify_point(d, base_point, levels, {}).pass) {
    throw Error(ErrorCode::BaseNotIntegral, "base point " + base_point.to_string() +
                                                " is not integral at the given levels");
  }

  SearchResult out;
  Modulus modulus(levels);
  std::set<ProjPoint> tried;

  bool restart = true;
  while (restart && out.points.size() < want) {
    restart = false;
    const BigInt& n = modulus.value();
    for (long h = 0; h <= static_cast<long>(cap) && !restart; ++h) {
      for (const auto& [a, b] : shell(h)) {
        BigInt s = base[0] + n * a;
        BigInt t = base[1] + n * b;
        if (s == 0 && t == 0) continue;
        ProjPoint q = phi.at(s, t);
        if (!tried.insert(q).second) continue;
        ++out.candidates;
        WeilReport report = verify_point(d, q, levels, {});
        if (report.pass) {
          out.points.push_back(EmittedPoint{q, ProjPoint::from_integers({s, t}), std::nullopt,
                                            levels, {}, std::move(report)});
          if (out.points.size() >= want) break;
          continue;
        }
        if (auto p = finite_offender(report); p && out.escalations < kMaxEscalations) {
          modulus.escalate(*p);
          ++out.escalations;
          restart = true;
          break;
        }
      }
      if (out.points.size() >= want) break;
    }
  }
  out.modulus = modulus.value();
  out.exhausted = out.points.size() < want;
  return out;
}

SIntegralResult search_s_integral(const CurveMap& phi, const Subscheme& dprime,
                                  const Subscheme& n, const PlaceSet& s, const ProjPoint& base,
                                  const LevelVector& levels, std::size_t want, std::size_t cap) {
  if (!s.count(Place::arch())) {
    throw Error(ErrorCode::PreconditionFailed, "S must contain the archimedean place");
  }
  if (base.size() != 2) throw Error(ErrorCode::DimensionMismatch, "base parameter must be in P^1");
  if (curve_meets(n, phi).count != PunctureCount::Zero) {
    throw Error(ErrorCode::IntersectsN, "curve meets the codimension-two part");
  }
  PunctureData punct = curve_meets(dprime, phi);
  if (punct.count == PunctureCount::Zero) {
    throw Error(ErrorCode::NoPunctures, "curve misses the divisor part; use search_genus0");
  }
  if (punct.count == PunctureCount::Many) {
    throw Error(ErrorCode::TooManyPunctures, "curve meets the divisor part in more than two places");
  }
  const Subscheme l = dprime.unite(n);
  const ProjPoint base_point = phi.at(base);
  if (!verify_point(l, base_point, levels, s).pass) {
    throw Error(ErrorCode::BaseNotIntegral, "base point " + base_point.to_string() +
                                                " is not S-integral at the given levels");
  }
  const std::set<BigInt> s_primes = finite_primes(s);

  SIntegralResult out;
  out.kind = punct.count == PunctureCount::One ? GroupKind::Additive : GroupKind::Multiplicative;
  BigInt unit = 1;
  if (out.kind == GroupKind::Multiplicative) {
    if (s_primes.empty()) {
      throw Error(ErrorCode::UnitsFinite,
                  "two punctures but S has no finite place: the S-units of Q are {1, -1}");
    }
    if (!punct.all_rational) {
      throw Error(ErrorCode::IrrationalPunctures,
                  "punctures are conjugate over a quadratic field: " + punct.witness.to_string());
    }
    for (const auto& p : s_primes) unit *= p;
    out.unit = unit;
  }

  const ProjPoint& p1 = punct.rational.front();
  BigInt lambda = 1;
  if (out.kind == GroupKind::Additive) {
    out.change = ParamChange{p1[0], base[0], p1[1], base[1]};
  } else {
    const ProjPoint& p2 = punct.rational.back();
    const BigInt det = p1[0] * p2[1] - p1[1] * p2[0];
    const BigInt a = base[0] * p2[1] - base[1] * p2[0];
    const BigInt b = p1[0] * base[1] - p1[1] * base[0];
    out.change = ParamChange{a * p1[0], b * p2[0], a * p1[1], b * p2[1]};
    lambda = det;
  }
  out.reparametrized = phi.reparametrize(out.change);

  SearchResult& res = out.search;
  Modulus modulus(levels, s_primes);
  std::set<ProjPoint> tried;

  auto candidate = [&](long j, const BigInt& step) -> std::pair<BigInt, BigInt> {
    BigInt u, w;
    if (out.kind == GroupKind::Additive) {
      u = modulus.value() * j;
      w = 1;
    } else if (j >= 0) {
      u = ipow(unit, static_cast<unsigned long>(j) * step.get_ui());
      w = 1;
    } else {
      u = 1;
      w = ipow(unit, static_cast<unsigned long>(-j) * step.get_ui());
    }
    const ParamChange& m = out.change;
    return {m.a * u + m.b * w, m.c * u + m.d * w};
  };

  bool restart = true;
  while (restart && res.points.size() < want) {
    restart = false;
    BigInt step = modulus.value();
    if (out.kind == GroupKind::Multiplicative) {
      BigInt lambda_part = 1;
      for (const auto& [p, e] : modulus.exponents()) {
        if (lambda != 0 && mpz_divisible_p(lambda.get_mpz_t(), p.get_mpz_t())) {
          lambda_part *= ipow(p, valuation(lambda, p));
        }
      }
      step = multiplicative_order(unit, modulus.value() * lambda_part);
    }
    out.step = step;
    for (long k = 0; k <= static_cast<long>(cap) && !restart; ++k) {
      const std::vector<long> js = k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k};
      for (long j : js) {
        auto [ps, pt] = candidate(j, step);
        if (ps == 0 && pt == 0) continue;
        ProjPoint param = ProjPoint::from_integers({ps, pt});
        ProjPoint q = phi.at(param);
        if (!tried.insert(q).second) continue;
        ++res.candidates;
        WeilReport report = verify_point(l, q, levels, s);
        if (report.pass) {
          res.points.push_back(
              EmittedPoint{q, param, std::nullopt, levels, s, std::move(report)});
          if (res.points.size() >= want) break;
          continue;
        }
        if (auto p = finite_offender(report); p && res.escalations < kMaxEscalations) {
          modulus.escalate(*p);
          ++res.escalations;
          restart = true;
          break;
        }
      }
      if (res.points.size() >= want) break;
    }
  }
  res.modulus = modulus.value();
  res.exhausted = res.points.size() < want;
  return out;
}

}  // namespace intpts
