#include <gtest/gtest.h>

#include <sstream>

#include "intpts/error.hpp"
#include "intpts/parse.hpp"
#include "intpts/records.hpp"

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
}  // namespace

TEST(Parse, Points) {
  EXPECT_EQ(parse_point("[2/3:4/3:0]").to_string(), "[1:2:0]");
  EXPECT_EQ(parse_point(" [ -2 : -4 : -6 ] ").to_string(), "[1:2:3]");
  EXPECT_EQ(parse_points("[1:0]\n# comment\n[3:4]; [0:1]").size(), 3u);
  EXPECT_EQ(code_of([] { parse_point("1:2:3"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_point("[1:x:3]"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_point("[0:0]"); }), ErrorCode::InvalidPoint);
}

TEST(Parse, Polynomials) {
  MPoly f = parse_mpoly("2x0x1 - (x1 + x2)^2 / 2", 3);
  // scaled by 2 to clear the denominator
  std::vector<BigInt> at{1, 2, 3};
  EXPECT_EQ(f.evaluate(at), 2 * 2 * 1 * 2 - 25);
  EXPECT_EQ(parse_form("x10 - x1", 11).to_string(), "x1 - x10");
  EXPECT_EQ(code_of([] { parse_mpoly("x0 + y", 2); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_mpoly("x0 / x1", 2); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_mpoly("(x0 + x1", 2); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_form("x0 + 1", 2); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_binary_form("s^2 - 3 s t", 2).coeffs(), (std::vector<BigInt>{1, -3, 0}));
  EXPECT_EQ(code_of([] { parse_binary_form("s^2 + t", 2); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_qpoly("2 - t^2").coeffs(),
            (std::vector<Rational>{Rational(2), Rational(0), Rational(-1)}));
}

TEST(Parse, SubschemesAndLevels) {
  Subscheme d = parse_subscheme("nvars 3\ncodim 2\ncomponent x0, x1\npoint [1:1:1]");
  EXPECT_EQ(d.components().size(), 2u);
  EXPECT_EQ(d.codimension(), 2u);
  Subscheme line = parse_subscheme("nvars 3; component x0");
  EXPECT_EQ(line.codimension(), 1u);
  EXPECT_TRUE(parse_subscheme("nvars 4; empty").is_empty_set());
  EXPECT_EQ(code_of([] { parse_subscheme("component x0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_subscheme("nvars 3; bogus 1"); }), ErrorCode::ParseError);

  LevelVector l = parse_levels("2:1, 3:0, inf:5/2");
  EXPECT_EQ(l.finite, (std::map<BigInt, unsigned>{{2, 1}}));
  EXPECT_EQ(l.arch, Rational(5, 2));
  EXPECT_EQ(l.to_string(), "2:1,inf:5/2");
  EXPECT_EQ(parse_levels(l.to_string()), l);
  EXPECT_EQ(code_of([] { parse_levels("4:1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_levels("inf"); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_places("inf, 2"), (PlaceSet{Place::arch(), Place::finite(2)}));
  EXPECT_TRUE(parse_places("").empty());
}

TEST(Records, WeilReportShape) {
  Subscheme d = parse_subscheme("point [1:0:0]");
  WeilReport r = verify_point(d, parse_point("[5:2:2]"), parse_levels("2:1,inf:3"), {});
  Json j = record(r);
  EXPECT_EQ(j["record"], "weil");
  EXPECT_EQ(j["point"], "[5:2:2]");
  EXPECT_EQ(j["pass"], true);
  bool saw2 = false;
  for (const auto& pc : j["places"]) {
    if (pc["place"] == "2") {
      saw2 = true;
      EXPECT_EQ(pc["value"], "2^1");
      EXPECT_EQ(pc["bound"], "2");
    }
    if (pc["place"] == "inf") EXPECT_EQ(pc["value"], "5/2");
  }
  EXPECT_TRUE(saw2);
  std::ostringstream out;
  write_record(out, j);
  EXPECT_EQ(out.str().back(), '\n');
  EXPECT_EQ(out.str().find('\n'), out.str().size() - 1);
}

TEST(Records, CertificateVerdict) {
  DegreeVerdict v{2, true, 6, 6};
  EXPECT_EQ(record(v).dump(),
            R"({"degree":2,"expected":6,"rank":6,"record":"certificate","verdict":"PASS"})");
}
