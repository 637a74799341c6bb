#include "intpts/weil.hpp"

#include <algorithm>
#include <sstream>

#include "intpts/error.hpp"

namespace intpts {

namespace {

// Generator values of every component at the primitive coordinates of P.
struct Evaluation {
  std::vector<std::vector<BigInt>> values;
  std::vector<BigInt> component_gcd;
  bool on_subscheme = false;
};

Evaluation evaluate_all(const Subscheme& d, const ProjPoint& p) {
  if (d.nvars() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "subscheme in " + std::to_string(d.nvars()) + " variables, point " +
                    p.to_string());
  }
  Evaluation ev;
  for (const auto& comp : d.components()) {
    std::vector<BigInt> vals;
    BigInt g = 0;
    for (const auto& gen : comp) {
      vals.push_back(gen.evaluate(p.coords()));
      g = gcd(g, vals.back());
    }
    if (g == 0) ev.on_subscheme = true;
    ev.values.push_back(std::move(vals));
    ev.component_gcd.push_back(g);
  }
  return ev;
}

unsigned finite_exponent(const Evaluation& ev, const BigInt& p) {
  unsigned best = 0;
  for (const auto& vals : ev.values) {
    std::optional<unsigned> m;
    for (const auto& x : vals) {
      if (x == 0) continue;
      unsigned v = valuation(x, p);
      if (!m || v < *m) m = v;
    }
    best = std::max(best, m.value_or(0));
  }
  return best;
}

Rational arch_value(const Subscheme& d, const Evaluation& ev, const ProjPoint& p) {
  const BigInt h = p.height();
  Rational best = 0;
  bool have = false;
  for (std::size_t c = 0; c < ev.values.size(); ++c) {
    std::optional<Rational> m;
    const auto& comp = d.components()[c];
    for (std::size_t g = 0; g < comp.size(); ++g) {
      const BigInt& x = ev.values[c][g];
      if (x == 0) continue;
      Rational q(ipow(h, comp[g].degree()), abs(x));
      q.canonicalize();
      if (!m || q < *m) m = q;
    }
    if (!have || *m > best) best = *m;
    have = true;
  }
  return best;
}

}  // namespace

WeilValue WeilValue::infinity(const Place& v) {
  WeilValue w;
  w.place = v;
  w.infinite = true;
  w.value = 0;
  return w;
}

WeilValue WeilValue::at_prime(const BigInt& p, unsigned m) {
  WeilValue w;
  w.place = Place::finite(p);
  w.exponent = m;
  w.value = Rational(ipow(p, m));
  return w;
}

WeilValue WeilValue::at_arch(const Rational& q) {
  WeilValue w;
  w.place = Place::arch();
  w.value = q;
  return w;
}

std::string WeilValue::to_string() const {
  if (infinite) return "infinity";
  if (place.is_finite()) return place.prime().get_str() + "^" + std::to_string(exponent);
  return value.get_str();
}

unsigned LevelVector::level_at(const BigInt& p) const {
  auto it = finite.find(p);
  return it == finite.end() ? 0 : it->second;
}

LevelVector LevelVector::merged_max(const LevelVector& other) const {
  LevelVector out = *this;
  for (const auto& [p, e] : other.finite) out.finite[p] = std::max(out.level_at(p), e);
  if (other.arch) out.arch = out.arch ? std::max(*out.arch, *other.arch) : *other.arch;
  return out;
}

std::string LevelVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : finite) {
    os << (first ? "" : ",") << p.get_str() << ":" << e;
    first = false;
  }
  if (arch) os << (first ? "" : ",") << "inf:" << arch->get_str();
  return os.str();
}

WeilValue local_weil(const Subscheme& d, const ProjPoint& p, const Place& v) {
  Evaluation ev = evaluate_all(d, p);
  if (ev.on_subscheme) return WeilValue::infinity(v);
  if (v.is_finite()) return WeilValue::at_prime(v.prime(), finite_exponent(ev, v.prime()));
  return WeilValue::at_arch(arch_value(d, ev, p));
}

PlaceSet support_places(const Subscheme& d, const ProjPoint& p, const FactorOptions& options) {
  Evaluation ev = evaluate_all(d, p);
  if (ev.on_subscheme) {
    throw Error(ErrorCode::OnSubscheme, p.to_string() + " lies on the subscheme");
  }
  PlaceSet out;
  for (const auto& g : ev.component_gcd) {
    if (g == 1) continue;
    for (const auto& [q, e] : factor(g, options)) out.insert(Place::finite(q));
  }
  return out;
}

LevelVector minimal_levels(const Subscheme& d, const ProjPoint& p, const FactorOptions& options) {
  LevelVector out;
  Evaluation ev = evaluate_all(d, p);
  if (ev.on_subscheme) {
    throw Error(ErrorCode::OnSubscheme, p.to_string() + " lies on the subscheme");
  }
  for (const auto& v : support_places(d, p, options)) {
    out.finite[v.prime()] = finite_exponent(ev, v.prime());
  }
  out.arch = arch_value(d, ev, p);
  return out;
}

WeilReport verify_point(const Subscheme& d, const ProjPoint& p, const LevelVector& levels,
                        const PlaceSet& s, const FactorOptions& options) {
  const bool arch_exempt = s.count(Place::arch()) > 0;
  if (!arch_exempt && !levels.arch) {
    throw Error(ErrorCode::MissingArchLevel,
                "archimedean place is constrained but no archimedean level was given");
  }
  const std::set<BigInt> s_primes = finite_primes(s);

  WeilReport report;
  report.point = p;
  Evaluation ev = evaluate_all(d, p);

  if (ev.on_subscheme) {
    report.on_subscheme = true;
    report.pass = false;
    for (const auto& [q, e] : levels.finite) {
      if (s_primes.count(q)) continue;
      report.offending.push_back(Place::finite(q));
    }
    if (!arch_exempt) report.offending.push_back(Place::arch());
    if (report.offending.empty()) {
      BigInt q = 2;
      while (s_primes.count(q)) mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
      report.offending.push_back(Place::finite(q));
    }
    for (const auto& v : report.offending) {
      PlaceCheck check{WeilValue::infinity(v), std::nullopt, false, false};
      if (v.is_arch()) {
        check.bound = levels.arch;
      } else {
        check.bound = Rational(ipow(v.prime(), levels.level_at(v.prime())));
      }
      report.places.push_back(std::move(check));
    }
    return report;
  }

  std::set<BigInt> known;
  for (const auto& [q, e] : levels.finite) known.insert(q);
  known.insert(s_primes.begin(), s_primes.end());

  auto check_prime = [&](const BigInt& q) {
    const unsigned m = finite_exponent(ev, q);
    PlaceCheck check;
    check.value = WeilValue::at_prime(q, m);
    check.exempt = s_primes.count(q) > 0;
    const unsigned level = levels.level_at(q);
    check.bound = Rational(ipow(q, level));
    check.within = check.exempt || m <= level;
    if (!check.within) report.offending.push_back(check.value.place);
    report.places.push_back(std::move(check));
  };

  for (const auto& q : known) check_prime(q);

  std::set<BigInt> extra;
  for (const auto& g : ev.component_gcd) {
    BigInt rest = strip_primes(g, known);
    if (rest == 1) continue;
    try {
      for (const auto& [q, e] : factor(rest, options)) extra.insert(q);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::FactorizationFailed) throw;
      report.unresolved_cofactor = rest;
    }
  }
  for (const auto& q : extra) check_prime(q);

  PlaceCheck arch;
  arch.value = WeilValue::at_arch(arch_value(d, ev, p));
  arch.exempt = arch_exempt;
  arch.bound = levels.arch;
  arch.within = arch_exempt || arch.value.value <= *levels.arch;
  if (!arch.within) report.offending.push_back(Place::arch());
  report.places.push_back(std::move(arch));

  report.pass = report.offending.empty() && !report.unresolved_cofactor;
  return report;
}

Classification classify_set(std::span<const ProjPoint> points, const Subscheme& d,
                            const PlaceSet& s, const FactorOptions& options) {
  if (points.empty()) throw Error(ErrorCode::PreconditionFailed, "classify_set needs points");
  const std::set<BigInt> s_primes = finite_primes(s);
  const bool arch_in_s = s.count(Place::arch()) > 0;

  Classification out;
  for (const auto& p : points) {
    LevelVector mine = minimal_levels(d, p, options);
    if (!mine.finite.empty()) out.classical_total = false;
    for (const auto& [q, e] : mine.finite) {
      if (!s_primes.count(q)) out.classical_arch = false;
    }
    out.everywhere_witness = out.everywhere_witness.merged_max(mine);
    out.support_growth.push_back(out.everywhere_witness.finite.size());
    out.arch_growth.push_back(*out.everywhere_witness.arch);
  }
  out.s_witness = out.everywhere_witness;
  for (const auto& q : s_primes) out.s_witness.finite.erase(q);
  if (arch_in_s) out.s_witness.arch.reset();
  return out;
}

WeilValue oracle_weil_points(std::span<const ProjPoint> targets, const ProjPoint& p,
                             const BigInt& prime) {
  unsigned best = 0;
  for (const auto& t : targets) {
    if (t.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "oracle arity");
    std::optional<unsigned> closest;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        BigInt minor = t[i] * p[j] - t[j] * p[i];
        if (minor == 0) continue;
        unsigned v = valuation(minor, prime);
        if (!closest || v < *closest) closest = v;
      }
    }
    if (!closest) return WeilValue::infinity(Place::finite(prime));
    best = std::max(best, *closest);
  }
  return WeilValue::at_prime(prime, best);
}

}  // namespace intpts
