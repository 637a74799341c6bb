#include <gtest/gtest.h>

#include "generators.hpp"
#include "intpts/error.hpp"
#include "intpts/genus0.hpp"
#include "intpts/parse.hpp"

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

}  // namespace

TEST(CurveMap, NormalizesCommonFactors) {
  BinaryForm s = BinaryForm::s(), t = BinaryForm::t();
  CurveMap m({(s * s).scaled(2), (s * t).scaled(2), (s * (s + t)).scaled(2)});
  EXPECT_EQ(m.degree(), 1u);
  EXPECT_EQ(m, CurveMap({s, t, s + t}));
  EXPECT_EQ(m.at(pt({1, 1})), pt({1, 1, 2}));
  EXPECT_EQ(parse_curve("degree 1; form s; form t; form s + t"), m);
}

TEST(Pullback, Examples) {
  CurveMap phi = parse_curve("degree 1; form s; form t; form t");
  auto pb = pullback(parse_subscheme("nvars 3; component x0"), phi);
  ASSERT_EQ(pb.size(), 1u);
  EXPECT_EQ(pb[0], std::vector<BinaryForm>{BinaryForm::s()});

  auto pb2 = pullback(point_ideal(pt({1, 1, 1})), phi);
  ASSERT_EQ(pb2[0].size(), 3u);
  EXPECT_EQ(pb2[0][0], BinaryForm::s() - BinaryForm::t());
  EXPECT_EQ(pb2[0][1], BinaryForm::s() - BinaryForm::t());
  EXPECT_TRUE(pb2[0][2].is_zero());

  auto pb3 = pullback(parse_subscheme("nvars 3; component x1 - x2"), phi);
  EXPECT_TRUE(pb3[0][0].is_zero());
}

TEST(CurveMeets, Examples) {
  CurveMap avoid = CurveMap::line(pt({1, 2, 3}), pt({0, 1, -1}));
  EXPECT_EQ(curve_meets(seven(), avoid).count, PunctureCount::Zero);

  PunctureData one = curve_meets(point_ideal(pt({1, 0})), CurveMap::identity());
  EXPECT_EQ(one.count, PunctureCount::One);
  EXPECT_EQ(one.rational, std::vector<ProjPoint>{pt({1, 0})});

  PunctureData two = curve_meets(parse_subscheme("nvars 2; component x0*x1"),
                                 CurveMap::identity());
  EXPECT_EQ(two.count, PunctureCount::Two);
  EXPECT_EQ(two.rational.size(), 2u);

  PunctureData conj = curve_meets(parse_subscheme("nvars 2; component x0^2 - 2*x1^2"),
                                  CurveMap::identity());
  EXPECT_EQ(conj.count, PunctureCount::Two);
  EXPECT_FALSE(conj.all_rational);

  PunctureData many = curve_meets(parse_subscheme("nvars 2; component x0*x1*(x0 - x1)"),
                                  CurveMap::identity());
  EXPECT_EQ(many.count, PunctureCount::Many);
}

TEST(CurveMeets, InvariantUnderParameterChange) {
  fuzz::Gen g(21);
  Subscheme d = seven();
  for (int i = 0; i < 60; ++i) {
    ProjPoint p = g.point(3, 5), q = g.point(3, 5);
    if (p == q) continue;
    CurveMap phi = CurveMap::line(p, q);
    ParamChange m{g.integer(-3, 3), g.integer(-3, 3), g.integer(-3, 3), g.integer(-3, 3)};
    if (m.determinant() == 0) continue;
    EXPECT_EQ(curve_meets(d, phi).count, curve_meets(d, phi.reparametrize(m)).count);
  }
}

TEST(Modulus, Initial) {
  EXPECT_EQ(Modulus(parse_levels("2:1")).value(), 4);
  EXPECT_EQ(Modulus(parse_levels("")).value(), 1);
  EXPECT_EQ(Modulus(parse_levels("2:2,3:1")).value(), 72);
  Modulus m(parse_levels("2:1"));
  m.escalate(2);
  EXPECT_EQ(m.value(), 8);
  m.escalate(5);
  EXPECT_EQ(m.value(), 40);
}

TEST(ChooseModulus, RequiresIntegralBase) {
  CurveMap phi = CurveMap::line(pt({1, 2, 3}), pt({0, 1, -1}));
  EXPECT_EQ(choose_modulus(seven(), phi, pt({1, 0}), parse_levels("2:1,inf:3")).value(), 4);
  EXPECT_EQ(code_of([&] { choose_modulus(seven(), phi, pt({1, 0}), parse_levels("inf:3")); }),
            ErrorCode::BaseNotIntegral);
}

TEST(SearchGenus0, EmptyDIdentity) {
  SearchResult r = search_genus0(CurveMap::identity(), Subscheme::empty(2), pt({1, 0}),
                                 parse_levels("inf:10"), 25);
  EXPECT_EQ(r.points.size(), 25u);
  EXPECT_FALSE(r.exhausted);
  for (const auto& e : r.points) EXPECT_TRUE(e.report.pass);
}

TEST(SearchGenus0, SevenPointLine) {
  Subscheme d = seven();
  CurveMap phi = CurveMap::line(pt({1, 2, 3}), pt({0, 1, -1}));
  LevelVector l = minimal_levels(d, pt({1, 2, 3}));
  SearchResult r = search_genus0(phi, d, pt({1, 0}), l, 60);
  ASSERT_GE(r.points.size(), 50u);
  std::set<ProjPoint> seen;
  for (const auto& e : r.points) {
    EXPECT_TRUE(verify_point(d, e.point, l, {}).pass) << e.point.to_string();
    EXPECT_EQ(phi.at(*e.parameter), e.point);
    EXPECT_TRUE(seen.insert(e.point).second);
    // Congruence soundness: finite support stays inside the level support.
    for (const auto& v : support_places(d, e.point)) EXPECT_TRUE(l.finite.count(v.prime()));
  }
  SearchResult again = search_genus0(phi, d, pt({1, 0}), l, 60);
  ASSERT_EQ(again.points.size(), r.points.size());
  for (std::size_t i = 0; i < r.points.size(); ++i) EXPECT_EQ(again.points[i].point, r.points[i].point);
}

TEST(SearchGenus0, Errors) {
  Subscheme d = seven();
  CurveMap hits = CurveMap::line(pt({1, 0, 0}), pt({1, 2, 3}));
  EXPECT_EQ(code_of([&] { search_genus0(hits, d, pt({0, 1}), parse_levels("2:1,inf:9"), 5); }),
            ErrorCode::IntersectsD);
  CurveMap phi = CurveMap::line(pt({1, 2, 3}), pt({0, 1, -1}));
  EXPECT_EQ(code_of([&] { search_genus0(phi, d, pt({1, 0}), parse_levels("2:1,inf:1"), 5); }),
            ErrorCode::BaseNotIntegral);
}

TEST(SearchGenus0, ExhaustedReportsPartialList) {
  // Height cap 4 leaves fewer than 1000 distinct parameters.
  SearchResult r = search_genus0(CurveMap::identity(), Subscheme::empty(2), pt({0, 1}),
                                 parse_levels("inf:1"), 1000, 4);
  EXPECT_TRUE(r.exhausted);
  EXPECT_LT(r.points.size(), 1000u);
  for (const auto& e : r.points) EXPECT_TRUE(e.report.pass);
}

TEST(SearchSIntegral, AdditiveTranslates) {
  Subscheme dprime = parse_subscheme("nvars 2; component x1");
  SIntegralResult r = search_s_integral(CurveMap::identity(), dprime, Subscheme::empty(2),
                                        {Place::arch()}, pt({0, 1}), LevelVector{}, 15);
  EXPECT_EQ(r.kind, GroupKind::Additive);
  ASSERT_EQ(r.search.points.size(), 15u);
  for (const auto& e : r.search.points) {
    EXPECT_EQ(abs(e.point[1]), 1) << e.point.to_string();
    EXPECT_TRUE(verify_point(dprime, e.point, LevelVector{}, {Place::arch()}).pass);
  }
}

TEST(SearchSIntegral, MultiplicativeUnits) {
  Subscheme dprime = parse_subscheme("nvars 2; component x0*x1");
  PlaceSet s{Place::arch(), Place::finite(2)};
  SIntegralResult r = search_s_integral(CurveMap::identity(), dprime, Subscheme::empty(2), s,
                                        pt({1, 1}), LevelVector{}, 12);
  EXPECT_EQ(r.kind, GroupKind::Multiplicative);
  EXPECT_EQ(r.unit, BigInt(2));
  ASSERT_EQ(r.search.points.size(), 12u);
  for (const auto& e : r.search.points) {
    // [2^j : 1] for j in Z, written primitively
    BigInt a = e.point[0], b = e.point[1];
    EXPECT_TRUE(a == 1 || b == 1) << e.point.to_string();
    BigInt other = a == 1 ? b : a;
    EXPECT_EQ(strip_primes(other, {2}), 1);
    EXPECT_TRUE(verify_point(dprime, e.point, LevelVector{}, s).pass);
  }
  EXPECT_EQ(code_of([&] {
              search_s_integral(CurveMap::identity(), dprime, Subscheme::empty(2),
                                {Place::arch()}, pt({1, 1}), LevelVector{}, 5);
            }),
            ErrorCode::UnitsFinite);
}

TEST(SearchSIntegral, Preconditions) {
  Subscheme dprime = parse_subscheme("nvars 2; component x0*x1*(x0 - x1)");
  EXPECT_EQ(code_of([&] {
              search_s_integral(CurveMap::identity(), dprime, Subscheme::empty(2),
                                {Place::arch(), Place::finite(2)}, pt({1, 2}), LevelVector{}, 5);
            }),
            ErrorCode::TooManyPunctures);
  Subscheme conj = parse_subscheme("nvars 2; component x0^2 - 2*x1^2");
  EXPECT_EQ(code_of([&] {
              search_s_integral(CurveMap::identity(), conj, Subscheme::empty(2),
                                {Place::arch(), Place::finite(2)}, pt({1, 1}), LevelVector{}, 5);
            }),
            ErrorCode::IrrationalPunctures);
  EXPECT_EQ(code_of([&] {
              search_s_integral(CurveMap::identity(), parse_subscheme("nvars 2; component x1"),
                                Subscheme::empty(2), {}, pt({0, 1}), LevelVector{}, 5);
            }),
            ErrorCode::PreconditionFailed);
}
