#include "intpts/sweeps.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "intpts/error.hpp"

namespace intpts {

namespace {

// Primitive integer vectors of the given length with max |v_i| == h and first
// nonzero entry positive, in lexicographic order.
std::vector<std::vector<BigInt>> primitive_shell(std::size_t len, long h) {
  std::vector<std::vector<BigInt>> out;
  std::vector<long> v(len, -h);
  while (true) {
    bool on_shell = std::any_of(v.begin(), v.end(), [h](long x) { return x == h || x == -h; });
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (on_shell && first != v.end() && *first > 0) {
      long g = 0;
      for (long x : v) g = std::gcd(g, x);
      if (g == 1) out.emplace_back(v.begin(), v.end());
    }
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (v[i] < h) {
        ++v[i];
        break;
      }
      v[i] = -h;
      if (i == 0) return out;
    }
    if (len == 0) return out;
  }
}

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Lazily enumerated hyperplanes through p, by height.
class HyperplaneStream {
 public:
  explicit HyperplaneStream(const ProjPoint& p) : p_(p) {}

  const std::vector<BigInt>& at(std::size_t index) {
    while (cache_.size() <= index) {
      ++height_;
      for (auto& h : primitive_shell(p_.size(), height_)) {
        if (dot(h, p_.coords()) == 0) cache_.push_back(std::move(h));
      }
    }
    return cache_[index];
  }

 private:
  ProjPoint p_;
  long height_ = 0;
  std::vector<std::vector<BigInt>> cache_;
};

MPoly partial(const MPoly& f, std::size_t i) {
  MPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

struct ConicParam {
  CurveMap map;
  ProjPoint base_parameter;
};

ConicParam conic_param_with_base(const HomForm& q, const ProjPoint& p) {
  if (q.nvars() != 3 || q.degree() != 2) {
    throw Error(ErrorCode::InvalidForm, "conic_param needs a quadratic form in 3 variables");
  }
  if (p.size() != 3) throw Error(ErrorCode::DimensionMismatch, "conic point must be in P^2");
  if (evaluate_form(q, p) != 0) {
    throw Error(ErrorCode::NotOnVariety, p.to_string() + " is not on the conic");
  }
  std::vector<BigInt> grad;
  for (std::size_t i = 0; i < 3; ++i) grad.push_back(partial(q.poly(), i).evaluate(p.coords()));
  if (std::all_of(grad.begin(), grad.end(), [](const BigInt& g) { return g == 0; })) {
    throw Error(ErrorCode::SingularAtP, "conic is singular at " + p.to_string());
  }
  // X(s,t) = s e_j + t e_k spans a line missing p.
  std::size_t i0 = 0;
  while (p[i0] == 0) ++i0;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != i0) others.push_back(i);
  }
  std::vector<BinaryForm> x(3, BinaryForm(1));
  x[others[0]] = BinaryForm::s();
  x[others[1]] = BinaryForm::t();
  const BinaryForm qx = compose(q.poly(), x);
  const BinaryForm bx(1, {grad[others[0]], grad[others[1]]});
  std::vector<BinaryForm> image;
  for (std::size_t i = 0; i < 3; ++i) {
    image.push_back(qx.scaled(p[i]) - bx * x[i]);
  }
  CurveMap map(std::move(image));
  if (map.degree() != 2) {
    throw Error(ErrorCode::PreconditionFailed, "conic " + q.to_string() + " is a line pair");
  }
  ProjPoint base = ProjPoint::from_integers({BigInt(-bx.coeff(1)), bx.coeff(0)});
  if (map.at(base) != p) throw std::logic_error("conic parametrization misses its base point");
  return {std::move(map), std::move(base)};
}

// Substitutes x_i = sum_k basis[k][i] y_k into f.
MPoly restrict_to_span(const MPoly& f, const std::vector<std::vector<BigInt>>& basis) {
  const std::size_t m = basis.size();
  std::vector<MPoly> xs;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    MPoly xi(m);
    for (std::size_t k = 0; k < m; ++k) xi += MPoly::variable(m, k).scaled(basis[k][i]);
    xs.push_back(std::move(xi));
  }
  MPoly out(m);
  for (const auto& [e, c] : f.terms()) {
    MPoly term = MPoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * xs[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

// Sections through p, produced on demand and filtered against an avoid-set.
class SectionStream {
 public:
  SectionStream(const AmbientDescriptor& x, const ProjPoint& p, std::size_t max_candidates)
      : x_(x), p_(p), hyperplanes_(p), max_candidates_(max_candidates) {}

  std::optional<SectionCurve> next(const Subscheme& avoid) {
    while (examined_ < max_candidates_) {
      std::optional<SectionCurve> c = candidate(examined_++);
      if (!c) continue;
      if (curve_meets(avoid, c->map).count == PunctureCount::Zero) return c;
    }
    return std::nullopt;
  }

  /// Next section whatever it meets; used where the avoid-set is only N.
  std::size_t examined() const { return examined_; }

 private:
  std::optional<SectionCurve> candidate(std::size_t index) {
    if (const auto* ps = std::get_if<ProjectiveSpace>(&x_)) {
      while (directions_.size() <= index) {
        ++dir_height_;
        for (auto& w : primitive_shell(ps->n, dir_height_)) directions_.push_back(std::move(w));
      }
      std::size_t i0 = 0;
      while (p_[i0] == 0) ++i0;
      std::vector<BigInt> full;
      for (std::size_t i = 0, k = 0; i < p_.size(); ++i) {
        full.push_back(i == i0 ? BigInt(0) : directions_[index][k++]);
      }
      ProjPoint w = ProjPoint::from_integers(full);
      return SectionCurve{CurveMap::line(p_, w), ProjPoint::from_integers({BigInt(1), BigInt(0)}),
                          w.coords()};
    }
    if (const auto* qs = std::get_if<QuadricSurface>(&x_)) {
      return quadric_section(qs->q, p_, hyperplanes_.at(index));
    }
    const auto& us = std::get<UserSections>(x_);
    if (index >= us.max_index) return std::nullopt;
    return us.section(p_, index);
  }

  const AmbientDescriptor& x_;
  ProjPoint p_;
  HyperplaneStream hyperplanes_;
  std::vector<std::vector<BigInt>> directions_;
  long dir_height_ = 0;
  std::size_t max_candidates_;
  std::size_t examined_ = 0;
};

void check_base(const AmbientDescriptor& x, const ProjPoint& p) {
  if (p.size() != ambient_nvars(x)) throw Error(ErrorCode::DimensionMismatch, "base point arity");
  if (!ambient_contains(x, p)) {
    throw Error(ErrorCode::NotOnVariety, p.to_string() + " is not on the ambient variety");
  }
}

void append_points(PointCloud& cloud, std::size_t curve, SearchResult&& res) {
  for (auto& e : res.points) {
    cloud.points.push_back(CloudPoint{std::move(e.point), curve, std::move(e.parameter),
                                      std::move(e.levels), std::move(e.exempt),
                                      std::move(e.report)});
  }
}

}  // namespace

std::size_t ambient_nvars(const AmbientDescriptor& x) {
  if (const auto* ps = std::get_if<ProjectiveSpace>(&x)) return ps->n + 1;
  if (const auto* qs = std::get_if<QuadricSurface>(&x)) return qs->q.nvars();
  return std::get<UserSections>(x).nvars;
}

bool ambient_contains(const AmbientDescriptor& x, const ProjPoint& p) {
  if (std::holds_alternative<ProjectiveSpace>(x)) return true;
  if (const auto* qs = std::get_if<QuadricSurface>(&x)) return evaluate_form(qs->q, p) == 0;
  return std::get<UserSections>(x).contains(p);
}

CurveMap conic_param(const HomForm& q, const ProjPoint& p) {
  return conic_param_with_base(q, p).map;
}

std::optional<SectionCurve> quadric_section(const HomForm& q, const ProjPoint& p,
                                            const std::vector<BigInt>& hyperplane) {
  if (dot(hyperplane, p.coords()) != 0) {
    throw Error(ErrorCode::PreconditionFailed, "hyperplane does not contain the base point");
  }
  const std::size_t n = p.size();
  std::vector<std::vector<BigInt>> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<BigInt> v(n, BigInt(0));
      v[i] = hyperplane[j];
      v[j] = -hyperplane[i];
      if (v[i] != 0 || v[j] != 0) kernel.push_back(std::move(v));
    }
  }
  std::vector<std::vector<BigInt>> basis{p.coords()};
  for (const auto& v : kernel) {
    auto trial = basis;
    trial.push_back(v);
    if (exact_rank(trial) == trial.size()) basis = std::move(trial);
    if (basis.size() == 3) break;
  }
  if (basis.size() != 3) return std::nullopt;

  MPoly restricted = restrict_to_span(q.poly(), basis);
  if (restricted.is_zero()) return std::nullopt;
  try {
    ConicParam cp =
        conic_param_with_base(HomForm(restricted), ProjPoint::from_integers({1, 0, 0}));
    std::vector<BinaryForm> image;
    for (std::size_t i = 0; i < n; ++i) {
      BinaryForm f(cp.map.degree());
      for (std::size_t k = 0; k < 3; ++k) f = f + cp.map.forms()[k].scaled(basis[k][i]);
      image.push_back(std::move(f));
    }
    return SectionCurve{CurveMap(std::move(image)), cp.base_parameter, hyperplane};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::SingularAtP || err.code() == ErrorCode::PreconditionFailed) {
      return std::nullopt;
    }
    throw;
  }
}

UserSections conic_cone_sections() {
  MPoly q = MPoly::variable(4, 0) * MPoly::variable(4, 2) - MPoly::variable(4, 1).pow(2);
  HomForm form(q);
  UserSections us;
  us.nvars = 4;
  us.contains = [form](const ProjPoint& p) { return evaluate_form(form, p) == 0; };
  auto stream = std::make_shared<std::map<std::vector<BigInt>, HyperplaneStream>>();
  us.section = [form, stream](const ProjPoint& base,
                              std::size_t index) -> std::optional<SectionCurve> {
    auto it = stream->try_emplace(base.coords(), base).first;
    return quadric_section(form, base, it->second.at(index));
  };
  return us;
}

std::vector<SectionCurve> section_curves(const AmbientDescriptor& x, const ProjPoint& p,
                                         const Subscheme& d, std::size_t howmany,
                                         std::size_t max_candidates) {
  check_base(x, p);
  if (d.contains(p)) throw Error(ErrorCode::OnSubscheme, p.to_string() + " lies on D");
  SectionStream stream(x, p, max_candidates);
  std::vector<SectionCurve> out;
  while (out.size() < howmany) {
    auto c = stream.next(d);
    if (!c) {
      throw Error(ErrorCode::Exhausted, "found only " + std::to_string(out.size()) +
                                            " sections after " +
                                            std::to_string(max_candidates) + " candidates");
    }
    out.push_back(std::move(*c));
  }
  return out;
}

PointCloud everywhere_sweep(const AmbientDescriptor& x, const Subscheme& d, const ProjPoint& p,
                            const SweepConfig& config) {
  if (!d.is_empty_set()) {
    auto codim = d.codimension();
    if (!codim) {
      throw Error(ErrorCode::PreconditionFailed, "declare the codimension of D");
    }
    if (*codim < 2) throw Error(ErrorCode::CodimTooSmall, "D must have codimension at least 2");
  }
  check_base(x, p);
  if (d.contains(p)) throw Error(ErrorCode::OnSubscheme, p.to_string() + " lies on D");

  PointCloud cloud;
  cloud.levels = minimal_levels(d, p);
  SectionStream stream(x, p, config.max_sections);
  std::size_t done = 0;
  for (std::size_t idx = 0; done < config.curves; ++idx) {
    auto c = stream.next(d);
    if (!c) break;
    CurveDiagnostic diag{idx, c->map.to_string(), std::nullopt, "", 0, "genus0"};
    try {
      SearchResult res = search_genus0(c->map, d, c->base_parameter, cloud.levels,
                                       config.per_curve, config.cap);
      diag.found = res.points.size();
      if (res.exhausted) {
        diag.error = ErrorCode::Exhausted;
        diag.message = "search cap reached";
      } else {
        ++done;
      }
      append_points(cloud, idx, std::move(res));
    } catch (const Error& err) {
      diag.error = err.code();
      diag.message = err.what();
    }
    cloud.curves.push_back(std::move(diag));
  }
  return cloud;
}

PointCloud s_integral_sweep(const AmbientDescriptor& x, const Subscheme& dprime,
                            const Subscheme& n, const PlaceSet& s, const ProjPoint& p,
                            const SweepConfig& config) {
  if (!s.count(Place::arch())) {
    throw Error(ErrorCode::PreconditionFailed, "S must contain the archimedean place");
  }
  if (dprime.divisor_degree() > 2) {
    throw Error(ErrorCode::DegreeTooLarge, "divisor part has degree " +
                                               std::to_string(dprime.divisor_degree()));
  }
  if (!n.is_empty_set() && n.codimension() && *n.codimension() < 2) {
    throw Error(ErrorCode::CodimTooSmall, "N must have codimension at least 2");
  }
  check_base(x, p);
  const Subscheme l = dprime.unite(n);
  if (l.contains(p)) throw Error(ErrorCode::OnSubscheme, p.to_string() + " lies on D' u N");

  PointCloud cloud;
  cloud.levels = minimal_levels(l, p);
  SectionStream stream(x, p, config.max_sections);
  std::size_t done = 0;
  for (std::size_t idx = 0; done < config.curves; ++idx) {
    auto c = stream.next(n);
    if (!c) break;
    CurveDiagnostic diag{idx, c->map.to_string(), std::nullopt, "", 0, ""};
    try {
      PunctureData punct = curve_meets(dprime, c->map);
      SearchResult res;
      if (punct.count == PunctureCount::Zero) {
        diag.kind = "genus0";
        res = search_genus0(c->map, l, c->base_parameter, cloud.levels, config.per_curve,
                            config.cap);
      } else {
        SIntegralResult sr = search_s_integral(c->map, dprime, n, s, c->base_parameter,
                                               cloud.levels, config.per_curve, config.cap);
        diag.kind = sr.kind == GroupKind::Additive ? "Ga" : "Gm";
        res = std::move(sr.search);
      }
      diag.found = res.points.size();
      if (res.exhausted) {
        diag.error = ErrorCode::Exhausted;
        diag.message = "search cap reached";
      } else {
        ++done;
      }
      append_points(cloud, idx, std::move(res));
    } catch (const Error& err) {
      diag.error = err.code();
      diag.message = err.what();
    }
    cloud.curves.push_back(std::move(diag));
  }
  return cloud;
}

std::vector<ProjPoint> enumerate_everywhere_integral(std::size_t n, const LevelVector& levels) {
  if (!levels.arch) {
    throw Error(ErrorCode::MissingArchLevel, "enumeration needs an archimedean level");
  }
  std::vector<ProjPoint> out;
  if (*levels.arch < 1) return out;
  Factorization f(levels.finite.begin(), levels.finite.end());
  for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);

  for (const auto& x0 : divisors(f)) {
    Rational scaled = *levels.arch * Rational(x0);
    const BigInt bound = scaled.get_num() / scaled.get_den();
    const long b = bound.get_si();
    std::vector<long> tail(n, -b);
    while (true) {
      BigInt g = x0;
      for (long v : tail) g = gcd(g, BigInt(v));
      if (g == 1) {
        std::vector<BigInt> coords{x0};
        for (long v : tail) coords.emplace_back(v);
        out.push_back(ProjPoint::from_integers(std::move(coords)));
      }
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (tail[i] < b) {
          ++tail[i];
          done = false;
          break;
        }
        tail[i] = -b;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<Exponents> monomials(std::size_t nvars, unsigned d) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (nvars > 0) rec(0, d);
  return out;
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < ncols && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    const BigInt& pv = rows[rank][col];
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        BigInt v = pv * rows[r][c] - rows[r][col] * rows[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[r][c] = std::move(v);
      }
      rows[r][col] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

std::vector<DegreeVerdict> density_certificate(std::span<const ProjPoint> cloud, std::size_t n,
                                               unsigned d) {
  std::vector<DegreeVerdict> out;
  for (unsigned deg = 1; deg <= d; ++deg) {
    const auto mons = monomials(n + 1, deg);
    std::vector<std::vector<BigInt>> rows;
    for (const auto& p : cloud) {
      if (p.size() != n + 1) throw Error(ErrorCode::DimensionMismatch, "cloud point arity");
      std::vector<BigInt> row;
      for (const auto& e : mons) {
        BigInt v = 1;
        for (std::size_t i = 0; i < e.size(); ++i) v *= ipow(p[i], e[i]);
        row.push_back(std::move(v));
      }
      rows.push_back(std::move(row));
    }
    DegreeVerdict v;
    v.degree = deg;
    v.expected = mons.size();
    v.rank = exact_rank(std::move(rows));
    v.pass = v.rank == v.expected;
    out.push_back(v);
  }
  return out;
}

}  // namespace intpts
