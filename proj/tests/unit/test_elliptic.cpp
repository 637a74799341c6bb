#include <gtest/gtest.h>

#include "generators.hpp"
#include "intpts/elliptic.hpp"
#include "intpts/error.hpp"
#include "intpts/parse.hpp"

using namespace intpts;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::PreconditionFailed;
}

const EllCurveQ e2() { return EllCurveQ(0, -2); }
const EllPointQ r35() { return EllPointQ(3, 5); }

EllSurface fixture_surface() {
  return parse_surface("A 2 - t^2; B t^2 + 1; x_num t; y_num t + 1");
}

Subscheme fixture_d() { return parse_subscheme("point [1:0:0]; point [0:0:1]; point [1:1:1]"); }

}  // namespace

TEST(EllCurve, Construction) {
  EXPECT_EQ(code_of([] { EllCurveQ(-3, 2); }), ErrorCode::SingularCurve);
  EXPECT_EQ(EllCurveQ(2, 1).discriminant(), -944);
  EXPECT_TRUE(e2().contains(r35()));
  EXPECT_FALSE(e2().contains(EllPointQ(3, 4)));
}

TEST(GroupLaw, Examples) {
  EllCurveQ e(2, 1);
  EllPointQ p(0, 1);
  EXPECT_EQ(ell_add(e, p, EllPointQ::identity()), p);
  EXPECT_TRUE(ell_add(e, p, ell_neg(p)).is_identity());
  EXPECT_EQ(ell_mul(e, 2, p), EllPointQ(1, -2));
  EXPECT_EQ(ell_mul(e, -2, p), EllPointQ(1, 2));
  EXPECT_TRUE(ell_mul(e, 0, p).is_identity());
}

TEST(GroupLaw, RandomTriples) {
  fuzz::Gen g(31);
  EllCurveQ e17(0, 17);
  EllPointQ g1(-2, 3), g2(-1, 4);
  for (int i = 0; i < 100; ++i) {
    auto pick = [&] {
      return ell_add(e17, ell_mul(e17, g.integer(-4, 4), g1), ell_mul(e17, g.integer(-4, 4), g2));
    };
    EllPointQ p = pick(), q = pick(), r = pick();
    EllPointQ lhs = ell_add(e17, ell_add(e17, p, q), r);
    EXPECT_EQ(lhs, ell_add(e17, p, ell_add(e17, q, r)));
    EXPECT_EQ(ell_add(e17, p, q), ell_add(e17, q, p));
    EXPECT_TRUE(ell_add(e17, p, ell_neg(p)).is_identity());
    EXPECT_TRUE(e17.contains(lhs));
  }
}

TEST(Torsion, Certificates) {
  EXPECT_TRUE(is_torsion(e2(), EllPointQ::identity()).torsion);
  EXPECT_EQ(is_torsion(e2(), EllPointQ::identity()).order, 1u);
  TorsionCertificate two = is_torsion(EllCurveQ(-1, 0), EllPointQ(0, 0));
  EXPECT_TRUE(two.torsion);
  EXPECT_EQ(two.order, 2u);
  TorsionCertificate c = is_torsion(e2(), r35());
  EXPECT_FALSE(c.torsion);
  EXPECT_EQ(c.multiples.size(), 12u);
  EXPECT_EQ(code_of([] { is_torsion(EllCurveQ(0, -2), EllPointQ(1, 1)); }),
            ErrorCode::PreconditionFailed);
}

TEST(GoodReduction, Examples) {
  EllCurveQ e(2, 1);
  EXPECT_FALSE(good_reduction(e, 59));
  EXPECT_TRUE(good_reduction(e, 7));
  EXPECT_EQ(code_of([&] { good_reduction(e, 2); }), ErrorCode::PreconditionFailed);
}

TEST(OrderMod, FrozenValues) {
  const std::vector<std::pair<long, long>> table{{1, 1},    {5, 2},    {25, 10},  {7, 7},
                                                 {49, 7},   {11, 12},  {121, 132}, {13, 19},
                                                 {169, 247}, {35, 14}};
  for (auto [n, r] : table) EXPECT_EQ(order_mod(e2(), r35(), n), r) << n;
  EXPECT_EQ(code_of([] { order_mod(EllCurveQ(0, -2), EllPointQ(3, 5), 3); }),
            ErrorCode::BadModulus);
  EXPECT_EQ(code_of([] { order_mod(EllCurveQ(0, -2), EllPointQ(3, 5), 10); }),
            ErrorCode::BadModulus);
}

TEST(OrderMod, LeastMultipleProperty) {
  for (long n : {5L, 7L, 11L, 13L, 25L}) {
    BigInt r = order_mod(e2(), r35(), n);
    const Factorization f = factor(n);
    auto ok = [&](long k) {
      EllPointQ q = ell_mul(e2(), k, r35());
      if (q.is_identity()) return true;
      for (const auto& [p, e] : f) {
        if (valuation(q.x(), p) > -2 * static_cast<long>(e)) return false;
      }
      return true;
    };
    EXPECT_TRUE(ok(r.get_si()));
    for (long k = 1; k < r.get_si(); ++k) EXPECT_FALSE(ok(k)) << n << " " << k;
  }
}

TEST(SearchElliptic, EmptyD) {
  EllipticSearchResult r = search_elliptic(e2(), plane_cubic_embedding, Subscheme::empty(3),
                                           r35(), r35(), parse_levels("inf:1"), 8);
  EXPECT_EQ(r.search.points.size(), 8u);
}

TEST(SearchElliptic, FixtureFindsTwenty) {
  Subscheme d = fixture_d();
  LevelVector l = minimal_levels(d, plane_cubic_embedding(r35()));
  EXPECT_EQ(l.to_string(), "2:1,inf:5/4");
  EllipticSearchResult r = search_elliptic(e2(), plane_cubic_embedding, d, r35(), r35(), l, 20);
  ASSERT_EQ(r.search.points.size(), 20u);
  for (const auto& e : r.search.points) {
    EXPECT_TRUE(verify_point(d, e.point, l, {}).pass);
    EllPointQ q = ell_add(e2(), r35(), ell_mul(e2(), *e.multiple, r35()));
    EXPECT_EQ(plane_cubic_embedding(q), e.point);
  }
}

TEST(SearchElliptic, TorsionGenerator) {
  EllCurveQ e(-1, 0);
  EXPECT_EQ(code_of([&] {
              search_elliptic(e, plane_cubic_embedding, Subscheme::empty(3), EllPointQ(0, 0),
                              EllPointQ(0, 0), parse_levels("inf:1"), 3);
            }),
            ErrorCode::TorsionGenerator);
}

TEST(Surface, IdentityAndSpecialize) {
  EllSurface s = fixture_surface();
  Fiber f = specialize(s, 0);
  EXPECT_EQ(f.curve.a(), 2);
  EXPECT_EQ(f.curve.b(), 1);
  EXPECT_EQ(f.point, EllPointQ(0, 1));
  Fiber h = specialize(s, Rational(1, 2));
  EXPECT_TRUE(h.curve.contains(h.point));
  EXPECT_EQ(code_of([] {
              parse_surface("A 2 - t^2; B t^2 + 1; x_num t; y_num t + 2");
            }),
            ErrorCode::PreconditionFailed);
}

TEST(Surface, SingularFiberAndPole) {
  EllSurface cusp = parse_surface("A 0; B t^2; x_num 0; y_num t");
  EXPECT_EQ(code_of([&] { specialize(cusp, 0); }), ErrorCode::SingularFiber);
  EllSurface doubled = section_multiple(fixture_surface(), 2);
  EXPECT_EQ(code_of([&] { specialize(doubled, -1); }), ErrorCode::SectionPole);
}

TEST(Surface, SectionMultipleMatchesFiberwise) {
  EllSurface s = fixture_surface();
  EXPECT_EQ(section_multiple(s, 1).x(), s.x());
  for (unsigned n : {2u, 3u}) {
    EllSurface m = section_multiple(s, n);
    for (long t0 : {2L, 3L, 5L, 7L, 11L}) {
      Fiber base = specialize(s, t0);
      Fiber multi = specialize(m, t0);
      EllPointQ want = ell_mul(base.curve, n, base.point);
      // Both fibers are scaled by their own u; compare in the unscaled frame.
      Rational ub = Rational(base.u) * base.u, um = Rational(multi.u) * multi.u;
      EXPECT_EQ(want.x() / ub, multi.point.x() / um);
      EXPECT_EQ(want.y() / (ub * base.u), multi.point.y() / (um * multi.u));
    }
  }
  EllSurface two_torsion = parse_surface("A t; B 0; x_num 0; y_num 0");
  EXPECT_EQ(code_of([&] { section_multiple(two_torsion, 2); }), ErrorCode::DegenerateSection);
}

TEST(FiberSweep, Fixture) {
  std::vector<Rational> ts;
  for (int i = 1; i <= 15; ++i) ts.emplace_back(i);
  Subscheme d = fixture_d();
  FiberSweepResult r = fiber_sweep(fixture_surface(), d, ts, std::monostate{});
  std::size_t good = 0;
  for (const auto& f : r.fibers) {
    if (f.t0 == 1) {
      EXPECT_EQ(f.skipped, ErrorCode::TorsionSpecialization);
      continue;
    }
    if (f.skipped || f.points.size() < 5) continue;
    ++good;
    EXPECT_FALSE(f.certificate->torsion);
    for (const auto& e : f.points) EXPECT_TRUE(verify_point(d, e.point, *f.levels, {}).pass);
  }
  EXPECT_GE(good, 10u);
}

TEST(FiberSweep, IdentitySectionInD) {
  std::vector<Rational> ts{Rational(2)};
  EXPECT_EQ(code_of([&] {
              fiber_sweep(fixture_surface(), parse_subscheme("point [0:1:0]"), ts,
                          std::monostate{});
            }),
            ErrorCode::MeetsIdentitySection);
}
