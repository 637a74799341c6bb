#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "intpts/error.hpp"
#include "intpts/parse.hpp"
#include "intpts/sweeps.hpp"

using namespace intpts;

namespace {

ProjPoint pt(std::vector<long> c) { return ProjPoint::from_integers({c.begin(), c.end()}); }

Subscheme seven() {
  return parse_subscheme("point [1:0:0]; point [0:1:0]; point [0:0:1]; point [1:1:0]; "
                         "point [1:0:1]; point [0:1:1]; point [1:1:1]");
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::PreconditionFailed;
}

bool vanishes_on(const HomForm& q, const CurveMap& phi) {
  return compose(q.poly(), phi.forms()).is_zero();
}

std::vector<ProjPoint> brute_force(std::size_t n, const LevelVector& levels, long max_x0) {
  Subscheme d = parse_subscheme("nvars " + std::to_string(n + 1) + "; component x0");
  long bound = 0;
  {
    Rational b = *levels.arch * max_x0;
    bound = BigInt(b.get_num() / b.get_den()).get_si();
  }
  std::vector<ProjPoint> out;
  std::vector<long> c(n + 1, 0);
  for (long x0 = 1; x0 <= max_x0; ++x0) {
    std::vector<long> tail(n, -bound);
    while (true) {
      std::vector<BigInt> raw{x0};
      for (long v : tail) raw.emplace_back(v);
      BigInt g = 0;
      for (const auto& v : raw) g = gcd(g, v);
      if (g == 1) {
        ProjPoint p = ProjPoint::from_integers(raw);
        if (verify_point(d, p, levels, {}).pass) out.push_back(p);
      }
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (tail[i] < bound) {
          ++tail[i];
          done = false;
          break;
        }
        tail[i] = -bound;
      }
      if (done) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> sorted(std::vector<ProjPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(ConicParam, Examples) {
  HomForm q = parse_form("x0*x2 - x1^2", 3);
  CurveMap phi = conic_param(q, pt({1, 0, 0}));
  EXPECT_EQ(phi.degree(), 2u);
  EXPECT_TRUE(vanishes_on(q, phi));
  // Image is the whole conic: it hits [1:0:0] and other conic points.
  std::set<ProjPoint> img;
  for (long s = -3; s <= 3; ++s) {
    for (long t = -3; t <= 3; ++t) {
      if (s == 0 && t == 0) continue;
      img.insert(phi.at(s, t));
    }
  }
  EXPECT_TRUE(img.count(pt({1, 0, 0})));
  EXPECT_TRUE(img.count(pt({0, 0, 1})));
  EXPECT_TRUE(img.count(pt({1, 1, 1})));

  EXPECT_EQ(code_of([] { conic_param(parse_form("x0^2", 3), pt({0, 1, 0})); }),
            ErrorCode::SingularAtP);
  EXPECT_EQ(code_of([&] { conic_param(q, pt({1, 1, 0})); }), ErrorCode::NotOnVariety);

  HomForm c2 = parse_form("x0^2 + x1^2 - 2*x2^2", 3);
  EXPECT_TRUE(vanishes_on(c2, conic_param(c2, pt({1, 1, 1}))));
}

TEST(SectionCurves, LinesThroughP) {
  Subscheme d = seven();
  ProjPoint p = pt({1, 2, 3});
  auto secs = section_curves(ProjectiveSpace{2}, p, d, 8);
  ASSERT_EQ(secs.size(), 8u);
  for (const auto& c : secs) {
    EXPECT_EQ(c.map.at(c.base_parameter), p);
    EXPECT_EQ(curve_meets(d, c.map).count, PunctureCount::Zero);
    // Independent check: none of the seven points is on the line.
    ProjPoint w = ProjPoint::from_integers(c.slice);
    for (const auto& t : parse_points("[1:0:0];[0:1:0];[0:0:1];[1:1:0];[1:0:1];[0:1:1];[1:1:1]")) {
      BigInt det = p[0] * (w[1] * t[2] - w[2] * t[1]) - p[1] * (w[0] * t[2] - w[2] * t[0]) +
                   p[2] * (w[0] * t[1] - w[1] * t[0]);
      EXPECT_NE(det, 0);
    }
  }
  EXPECT_EQ(code_of([&] { section_curves(ProjectiveSpace{2}, pt({1, 1, 1}), d, 1); }),
            ErrorCode::OnSubscheme);
  EXPECT_EQ(code_of([&] { section_curves(ProjectiveSpace{2}, p, d, 50, 10); }),
            ErrorCode::Exhausted);
}

TEST(SectionCurves, QuadricConics) {
  HomForm q = parse_form("x0*x3 - x1*x2", 4);
  ProjPoint p = pt({1, 0, 0, 0});
  Subscheme d = parse_subscheme("point [1:1:1:2]; point [1:0:0:1]");
  auto secs = section_curves(QuadricSurface{q, p}, p, d, 4);
  ASSERT_EQ(secs.size(), 4u);
  for (const auto& c : secs) {
    EXPECT_EQ(c.map.degree(), 2u);
    EXPECT_TRUE(vanishes_on(q, c.map));
    EXPECT_EQ(c.map.at(c.base_parameter), p);
    EXPECT_EQ(curve_meets(d, c.map).count, PunctureCount::Zero);
  }
  EXPECT_EQ(code_of([&] { section_curves(QuadricSurface{q, p}, pt({1, 1, 1, 2}), d, 1); }),
            ErrorCode::NotOnVariety);
}

TEST(SectionCurves, ConeFixture) {
  UserSections cone = conic_cone_sections();
  ProjPoint p = pt({1, 1, 1, 0});
  HomForm q = parse_form("x0*x2 - x1^2", 4);
  Subscheme d = parse_subscheme("point [0:0:0:1]");
  auto secs = section_curves(cone, p, d, 5);
  ASSERT_EQ(secs.size(), 5u);
  for (const auto& c : secs) {
    EXPECT_TRUE(vanishes_on(q, c.map));
    EXPECT_EQ(c.map.at(c.base_parameter), p);
  }
  PointCloud cloud = everywhere_sweep(cone, d, p, {3, 6, 64, 200});
  EXPECT_GE(cloud.points.size(), 18u);
  for (const auto& cp : cloud.points) EXPECT_TRUE(verify_point(d, cp.point, cloud.levels, {}).pass);
}

TEST(EverywhereSweep, SevenPoints) {
  Subscheme d = seven();
  PointCloud cloud = everywhere_sweep(ProjectiveSpace{2}, d, pt({1, 2, 3}), {5, 20, 64, 200});
  EXPECT_EQ(cloud.levels, minimal_levels(d, pt({1, 2, 3})));
  std::map<std::size_t, std::size_t> per_curve;
  for (const auto& cp : cloud.points) {
    ++per_curve[cp.curve_index];
    EXPECT_TRUE(verify_point(d, cp.point, cp.levels, {}).pass);
    EXPECT_EQ(cp.levels, cloud.levels);
  }
  EXPECT_GE(per_curve.size(), 5u);
  for (auto [idx, count] : per_curve) EXPECT_GE(count, 20u);

  std::vector<ProjPoint> pts;
  for (const auto& cp : cloud.points) pts.push_back(cp.point);
  for (const auto& v : density_certificate(pts, 2, 3)) EXPECT_TRUE(v.pass) << v.degree;
}

TEST(EverywhereSweep, EmptyDAndErrors) {
  PointCloud cloud = everywhere_sweep(ProjectiveSpace{2}, Subscheme::empty(3), pt({1, 2, 3}),
                                      {3, 10, 64, 200});
  EXPECT_EQ(cloud.points.size(), 30u);
  EXPECT_TRUE(cloud.levels.finite.empty());
  EXPECT_EQ(code_of([] {
              everywhere_sweep(ProjectiveSpace{2}, parse_subscheme("nvars 3; component x0"),
                               pt({1, 2, 3}));
            }),
            ErrorCode::CodimTooSmall);
  EXPECT_EQ(code_of([] { everywhere_sweep(ProjectiveSpace{2}, seven(), pt({1, 1, 1})); }),
            ErrorCode::OnSubscheme);
}

TEST(SIntegralSweep, LineWithAdditiveCurves) {
  Subscheme dprime = parse_subscheme("nvars 3; component x0");
  Subscheme n = parse_subscheme("point [0:1:0]");
  PlaceSet s{Place::arch()};
  PointCloud cloud = s_integral_sweep(ProjectiveSpace{2}, dprime, n, s, pt({1, 1, 1}),
                                      {5, 30, 64, 200});
  std::size_t additive = 0;
  for (const auto& c : cloud.curves) {
    if (c.kind != "Ga") continue;
    ++additive;
    EXPECT_GE(c.found, 30u);
  }
  EXPECT_GE(additive, 5u);
  Subscheme l = dprime.unite(n);
  for (const auto& cp : cloud.points) EXPECT_TRUE(verify_point(l, cp.point, cp.levels, s).pass);
}

TEST(SIntegralSweep, ConicNeedsAFinitePlace) {
  Subscheme conic = parse_subscheme("nvars 3; component x0*x2 - x1^2");
  ProjPoint p = pt({1, 0, 1});
  PointCloud arch_only = s_integral_sweep(ProjectiveSpace{2}, conic, Subscheme::empty(3),
                                          {Place::arch()}, p, {5, 30, 64, 60});
  EXPECT_TRUE(arch_only.points.empty());
  for (const auto& c : arch_only.curves) EXPECT_EQ(c.error, ErrorCode::UnitsFinite);

  PlaceSet s{Place::arch(), Place::finite(2)};
  PointCloud with2 =
      s_integral_sweep(ProjectiveSpace{2}, conic, Subscheme::empty(3), s, p, {3, 30, 64, 200});
  std::size_t mult = 0;
  for (const auto& c : with2.curves) {
    if (c.kind == "Gm") {
      ++mult;
      EXPECT_GE(c.found, 30u);
    } else {
      EXPECT_EQ(c.error, ErrorCode::IrrationalPunctures);
    }
  }
  EXPECT_EQ(mult, 3u);
  for (const auto& cp : with2.points) EXPECT_TRUE(verify_point(conic, cp.point, cp.levels, s).pass);
}

TEST(SIntegralSweep, Preconditions) {
  Subscheme cubic = parse_subscheme("nvars 3; component x0^3 - x1*x2^2");
  EXPECT_EQ(code_of([&] {
              s_integral_sweep(ProjectiveSpace{2}, cubic, Subscheme::empty(3), {Place::arch()},
                               pt({1, 2, 3}));
            }),
            ErrorCode::DegreeTooLarge);
  EXPECT_EQ(code_of([] {
              s_integral_sweep(ProjectiveSpace{2}, parse_subscheme("nvars 3; component x0"),
                               Subscheme::empty(3), {}, pt({1, 2, 3}));
            }),
            ErrorCode::PreconditionFailed);
}

TEST(Enumerate, ProjectiveLine) {
  auto five = enumerate_everywhere_integral(1, parse_levels("inf:2"));
  EXPECT_EQ(sorted(five), sorted(parse_points("[1:0];[1:1];[1:-1];[1:2];[1:-2]")));
  auto nine = enumerate_everywhere_integral(1, parse_levels("inf:2,2:1"));
  EXPECT_EQ(nine.size(), 9u);
  EXPECT_EQ(sorted(nine),
            sorted(parse_points("[1:0];[1:1];[1:-1];[1:2];[1:-2];[2:1];[2:-1];[2:3];[2:-3]")));
  EXPECT_EQ(sorted(five), brute_force(1, parse_levels("inf:2"), 1));
  EXPECT_EQ(sorted(nine), brute_force(1, parse_levels("inf:2,2:1"), 2));
}

TEST(Enumerate, EdgeLevels) {
  EXPECT_TRUE(enumerate_everywhere_integral(2, parse_levels("inf:0")).empty());
  EXPECT_TRUE(enumerate_everywhere_integral(2, parse_levels("inf:1/2,3:2")).empty());
  auto unit = enumerate_everywhere_integral(2, parse_levels("inf:1"));
  EXPECT_EQ(unit.size(), 9u);
  for (const auto& p : unit) EXPECT_EQ(p[0], 1);
  EXPECT_EQ(code_of([] { enumerate_everywhere_integral(1, parse_levels("2:1")); }),
            ErrorCode::MissingArchLevel);
}

TEST(Enumerate, MatchesBruteForce) {
  for (const char* lv : {"inf:3,2:1", "inf:3/2,3:1", "inf:2,2:1,3:1"}) {
    LevelVector l = parse_levels(lv);
    long m = 1;
    for (const auto& [p, e] : l.finite) m *= ipow(p, e).get_si();
    EXPECT_EQ(sorted(enumerate_everywhere_integral(2, l)), brute_force(2, l, m)) << lv;
  }
}

TEST(Density, Examples) {
  auto collinear = parse_points("[1:0:0];[1:1:1];[1:2:2]");
  auto v = density_certificate(collinear, 2, 1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_FALSE(v[0].pass);
  EXPECT_EQ(v[0].rank, 2u);
  EXPECT_EQ(v[0].expected, 3u);

  // The degree-2 simplex lattice {x : x_i >= 0, sum = 2} is unisolvent.
  std::vector<ProjPoint> lattice;
  for (const auto& e : monomials(3, 2)) {
    lattice.push_back(ProjPoint::from_integers({BigInt(e[0]), BigInt(e[1]), BigInt(e[2])}));
  }
  auto w = density_certificate(lattice, 2, 2);
  EXPECT_TRUE(w[0].pass);
  EXPECT_TRUE(w[1].pass);
  EXPECT_EQ(monomials(3, 3).size(), 10u);
}

TEST(Density, MonotoneUnderAddingPoints) {
  fuzz::Gen g(41);
  for (int i = 0; i < 30; ++i) {
    std::vector<ProjPoint> cloud;
    for (int k = 0; k < g.integer(3, 12); ++k) cloud.push_back(g.point(3, 4));
    auto before = density_certificate(cloud, 2, 3);
    cloud.push_back(g.point(3, 4));
    auto after = density_certificate(cloud, 2, 3);
    for (std::size_t d = 0; d < before.size(); ++d) {
      if (before[d].pass) EXPECT_TRUE(after[d].pass);
      EXPECT_GE(after[d].rank, before[d].rank);
    }
  }
}

TEST(ExactRank, Bareiss) {
  std::vector<std::vector<BigInt>> m{{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  EXPECT_EQ(exact_rank(m), 2u);
  std::vector<std::vector<BigInt>> id{{1, 0}, {0, 1}, {5, 7}};
  EXPECT_EQ(exact_rank(id), 2u);
  EXPECT_EQ(exact_rank({}), 0u);
}
