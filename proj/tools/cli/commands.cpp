#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "intpts/elliptic.hpp"
#include "intpts/error.hpp"
#include "intpts/genus0.hpp"
#include "intpts/parse.hpp"
#include "intpts/records.hpp"
#include "intpts/sweeps.hpp"
#include "intpts/weil.hpp"

namespace intpts::cli {

namespace {

// Raised by demos when one of their checks does not hold.
struct DemoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

struct Options {
  std::string subscheme;
  std::string divisor;
  std::string avoid;
  std::string point;
  std::string points;
  std::string levels = "minimal";
  std::string places;
  std::string curve;
  std::string base = "[1:0]";
  std::string ambient = "P2";
  std::string quadric;
  std::string surface;
  std::string a, b, p0, r;
  std::string demo;
  std::vector<std::string> t_values;
  long t_from = 1, t_to = 15;
  std::size_t want = 20, cap = 64, max_multiple = 200;
  std::size_t curves = 5, per_curve = 20, max_sections = 200, per_fiber = 5;
  unsigned multiplier = 0, degree = 3, n = 2;
  bool s_integral = false;
};

Subscheme load_subscheme(const std::string& arg, std::size_t nvars) {
  if (arg.empty()) return Subscheme::empty(nvars);
  Subscheme d = parse_subscheme(load_text(arg));
  if (d.nvars() != nvars) {
    throw Error(ErrorCode::DimensionMismatch, "subscheme lives in " + std::to_string(d.nvars()) +
                                                  " variables, expected " +
                                                  std::to_string(nvars));
  }
  return d;
}

std::optional<LevelVector> levels_option(const std::string& text) {
  if (text == "minimal") return std::nullopt;
  return parse_levels(text);
}

EllPointQ parse_affine(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::ParseError, "affine point must look like x,y");
  }
  std::string x = text.substr(0, comma), y = text.substr(comma + 1);
  for (auto* s : {&x, &y}) {
    s->erase(0, s->find_first_not_of(" ("));
    s->erase(s->find_last_not_of(" )") + 1);
  }
  return EllPointQ(parse_rational(x), parse_rational(y));
}

AmbientDescriptor load_ambient(const Options& o, const ProjPoint& base) {
  if (o.ambient == "quadric") {
    if (o.quadric.empty()) throw Error(ErrorCode::ParseError, "--quadric is required");
    return QuadricSurface{parse_form(load_text(o.quadric), base.size()), base};
  }
  if (o.ambient == "cone") return conic_cone_sections();
  if (o.ambient.size() >= 2 && o.ambient[0] == 'P') {
    return ProjectiveSpace{static_cast<std::size_t>(std::stoul(o.ambient.substr(1)))};
  }
  throw Error(ErrorCode::ParseError, "unknown ambient '" + o.ambient + "'");
}

void emit_cloud(const Io& io, const PointCloud& cloud) {
  for (const auto& c : cloud.curves) write_record(io.out, record(c));
  for (const auto& p : cloud.points) write_record(io.out, record(p));
}

std::size_t full_curves(const PointCloud& cloud, std::size_t per_curve) {
  std::size_t n = 0;
  for (const auto& c : cloud.curves) n += c.found >= per_curve ? 1 : 0;
  return n;
}

void certify_cloud(const Io& io, const PointCloud& cloud, std::size_t n, unsigned degree) {
  if (degree == 0) return;
  std::vector<ProjPoint> pts;
  for (const auto& p : cloud.points) pts.push_back(p.point);
  for (const auto& v : density_certificate(pts, n, degree)) write_record(io.out, record(v));
}

// --- commands -------------------------------------------------------------

void cmd_weil(const Io& io, const Options& o) {
  ProjPoint p = parse_point(o.point);
  Subscheme d = load_subscheme(o.subscheme, p.size());
  PlaceSet support = support_places(d, p);
  PlaceSet report = o.places.empty() ? support : parse_places(o.places);
  report.insert(Place::arch());
  Json j;
  j["record"] = "weil_values";
  j["point"] = p.to_string();
  Json values = Json::object();
  for (const auto& v : report) values[v.to_string()] = record(local_weil(d, p, v));
  j["values"] = std::move(values);
  j["support"] = record(support);
  j["minimal_levels"] = record(minimal_levels(d, p));
  write_record(io.out, j);
  io.err << "weil: " << p.to_string() << " support " << support.size() << " place(s)\n";
}

void cmd_verify(const Io& io, const Options& o) {
  auto pts = parse_points(load_text(o.points.empty() ? o.point : o.points));
  if (pts.empty()) throw Error(ErrorCode::ParseError, "no points given");
  Subscheme d = load_subscheme(o.subscheme, pts.front().size());
  PlaceSet s = parse_places(o.places);
  auto fixed = levels_option(o.levels);
  std::size_t passed = 0;
  for (const auto& p : pts) {
    LevelVector l = fixed ? *fixed : minimal_levels(d, p);
    WeilReport r = verify_point(d, p, l, s);
    passed += r.pass ? 1 : 0;
    Json j = record(r);
    j["levels"] = record(l);
    write_record(io.out, j);
  }
  io.err << "verify: " << passed << "/" << pts.size() << " pass\n";
}

void cmd_classify(const Io& io, const Options& o) {
  auto pts = parse_points(load_text(o.points));
  if (pts.empty()) throw Error(ErrorCode::ParseError, "no points given");
  Subscheme d = load_subscheme(o.subscheme, pts.front().size());
  Classification c = classify_set(pts, d, parse_places(o.places));
  write_record(io.out, record(c));
  io.err << "classify: " << pts.size() << " points, witness " << c.everywhere_witness.to_string()
         << "\n";
}

void cmd_search_genus0(const Io& io, const Options& o) {
  CurveMap phi = parse_curve(load_text(o.curve));
  ProjPoint base = parse_point(o.base);
  const ProjPoint at = phi.at(base);
  SearchResult res;
  if (o.s_integral) {
    Subscheme dprime = load_subscheme(o.divisor.empty() ? o.subscheme : o.divisor, phi.nvars());
    Subscheme n = load_subscheme(o.avoid, phi.nvars());
    auto fixed = levels_option(o.levels);
    LevelVector l = fixed ? *fixed : minimal_levels(dprime.unite(n), at);
    SIntegralResult r = search_s_integral(phi, dprime, n, parse_places(o.places), base, l,
                                          o.want, o.cap);
    res = std::move(r.search);
  } else {
    Subscheme d = load_subscheme(o.subscheme, phi.nvars());
    auto fixed = levels_option(o.levels);
    LevelVector l = fixed ? *fixed : minimal_levels(d, at);
    res = search_genus0(phi, d, base, l, o.want, o.cap);
  }
  for (const auto& e : res.points) write_record(io.out, record(e));
  Json s;
  s["record"] = "search";
  s["found"] = res.points.size();
  s["exhausted"] = res.exhausted;
  s["modulus"] = res.modulus.get_str();
  s["escalations"] = res.escalations;
  s["candidates"] = res.candidates;
  write_record(io.out, s);
  io.err << "search-genus0: " << res.points.size() << " points, modulus " << res.modulus
         << (res.exhausted ? " (exhausted)" : "") << "\n";
}

void cmd_search_elliptic(const Io& io, const Options& o) {
  EllCurveQ e(parse_integer(o.a), parse_integer(o.b));
  EllPointQ p0 = parse_affine(o.p0);
  EllPointQ r = o.r.empty() ? p0 : parse_affine(o.r);
  Subscheme d = load_subscheme(o.subscheme, 3);
  auto fixed = levels_option(o.levels);
  LevelVector l = fixed ? *fixed : minimal_levels(d, plane_cubic_embedding(p0));
  EllipticSearchResult res =
      search_elliptic(e, plane_cubic_embedding, d, p0, r, l, o.want, o.max_multiple);
  for (const auto& pt : res.search.points) write_record(io.out, record(pt));
  Json s;
  s["record"] = "search";
  s["found"] = res.search.points.size();
  s["exhausted"] = res.search.exhausted;
  s["modulus"] = res.modulus.get_str();
  s["step"] = res.r.get_str();
  s["certificate"] = record(is_torsion(e, r));
  write_record(io.out, s);
  io.err << "search-elliptic: " << res.search.points.size() << " points on " << e.to_string()
         << "\n";
}

SweepConfig sweep_config(const Options& o) {
  return SweepConfig{o.curves, o.per_curve, o.cap, o.max_sections};
}

void cmd_sweep(const Io& io, const Options& o) {
  ProjPoint p = parse_point(o.point);
  AmbientDescriptor x = load_ambient(o, p);
  Subscheme d = load_subscheme(o.subscheme, p.size());
  PointCloud cloud = everywhere_sweep(x, d, p, sweep_config(o));
  emit_cloud(io, cloud);
  certify_cloud(io, cloud, p.size() - 1, o.degree);
  io.err << "sweep: " << cloud.points.size() << " points, " << full_curves(cloud, o.per_curve)
         << " full curves, levels " << cloud.levels.to_string() << "\n";
}

void cmd_sweep_s(const Io& io, const Options& o) {
  ProjPoint p = parse_point(o.point);
  AmbientDescriptor x = load_ambient(o, p);
  Subscheme dprime = load_subscheme(o.divisor, p.size());
  Subscheme n = load_subscheme(o.avoid, p.size());
  PointCloud cloud = s_integral_sweep(x, dprime, n, parse_places(o.places), p, sweep_config(o));
  emit_cloud(io, cloud);
  io.err << "sweep-s: " << cloud.points.size() << " points, " << full_curves(cloud, o.per_curve)
         << " full curves\n";
}

void cmd_surface_sweep(const Io& io, const Options& o) {
  EllSurface s = parse_surface(load_text(o.surface));
  Subscheme d = load_subscheme(o.subscheme, 3);
  std::vector<Rational> ts;
  if (!o.t_values.empty()) {
    for (const auto& t : o.t_values) ts.push_back(parse_rational(t));
  } else {
    for (long t = o.t_from; t <= o.t_to; ++t) ts.emplace_back(t);
  }
  LevelsPolicy policy = std::monostate{};
  if (auto fixed = levels_option(o.levels)) policy = *fixed;
  SweepOptions opt;
  opt.per_fiber = o.per_fiber;
  opt.max_multiple = o.max_multiple;
  if (o.multiplier > 0) opt.multiplier = o.multiplier;
  FiberSweepResult res = fiber_sweep(s, d, ts, policy, opt);
  std::size_t admissible = 0;
  for (const auto& f : res.fibers) {
    write_record(io.out, record(f));
    admissible += !f.skipped && f.points.size() >= o.per_fiber ? 1 : 0;
  }
  io.err << "surface-sweep: multiplier " << res.multiplier << ", " << admissible << "/"
         << res.fibers.size() << " fibers with " << o.per_fiber << " points\n";
}

void cmd_enumerate(const Io& io, const Options& o) {
  auto l = levels_option(o.levels);
  if (!l) throw Error(ErrorCode::PreconditionFailed, "enumerate needs explicit levels");
  auto pts = enumerate_everywhere_integral(o.n, *l);
  for (const auto& p : pts) {
    Json j;
    j["record"] = "point";
    j["point"] = p.to_string();
    j["levels"] = record(*l);
    write_record(io.out, j);
  }
  io.err << "enumerate: " << pts.size() << " points\n";
}

void cmd_certify(const Io& io, const Options& o) {
  auto pts = parse_points(load_text(o.points));
  if (pts.empty()) throw Error(ErrorCode::ParseError, "no points given");
  auto verdicts = density_certificate(pts, pts.front().size() - 1, o.degree);
  for (const auto& v : verdicts) write_record(io.out, record(v));
  io.err << "certify: " << pts.size() << " points\n";
}

// --- demos ----------------------------------------------------------------

void require(bool ok, const std::string& what) {
  if (!ok) throw DemoFailure(what);
}

Subscheme seven_point_d() {
  return parse_subscheme("point [1:0:0]; point [0:1:0]; point [0:0:1]; point [1:1:0]; "
                         "point [1:0:1]; point [0:1:1]; point [1:1:1]");
}

void demo_n_over_1(const Io& io) {
  std::vector<ProjPoint> pts;
  for (long n = 1; n <= 100; ++n) pts.push_back(ProjPoint::from_integers({BigInt(n), BigInt(1)}));
  Subscheme d = point_ideal(ProjPoint::from_integers({1, 0}));
  for (const auto& p : pts) {
    for (long q : {2L, 3L, 5L, 7L}) {
      require(local_weil(d, p, Place::finite(q)).value == 1, "finite value above 1");
    }
    require(local_weil(d, p, Place::arch()).value == p[0], "arch value differs from n");
  }
  Classification c = classify_set(pts, d, {Place::arch()});
  write_record(io.out, record(c));
  require(c.classical_arch, "[n:1] should be classically integral");
  for (std::size_t i = 1; i < c.arch_growth.size(); ++i) {
    require(c.arch_growth[i - 1] < c.arch_growth[i], "arch witness should keep growing");
  }
  io.err << "n-over-1: classically integral, arch witness " << to_string(c.arch_growth.back())
         << " after 100 points and still growing\n";
}

void demo_seven_points(const Io& io) {
  Subscheme d = seven_point_d();
  // (a) no classically integral points: every point is 2-adically close to D.
  std::size_t checked = 0;
  for (long h = 1; checked < 1000; ++h) {
    for (long a = 0; a <= h && checked < 1000; ++a) {
      for (long b = -h; b <= h && checked < 1000; ++b) {
        for (long c = -h; c <= h && checked < 1000; ++c) {
          if (std::max({a, std::abs(b), std::abs(c)}) != h) continue;
          ProjPoint p = ProjPoint::from_integers({a, b, c});
          if (p[0] != a || p[1] != b || p[2] != c) continue;  // not primitive/canonical
          WeilValue v = local_weil(d, p, Place::finite(2));
          require(v.infinite || v.exponent >= 1, p.to_string() + " has Lambda_2 = 1");
          ++checked;
        }
      }
    }
  }
  Json a;
  a["record"] = "seven_points_mod2";
  a["checked"] = checked;
  a["all_close_at_2"] = true;
  write_record(io.out, a);

  // (b) everywhere integral cloud on lines through [1:2:3].
  ProjPoint base = ProjPoint::from_integers({1, 2, 3});
  PointCloud cloud = everywhere_sweep(ProjectiveSpace{2}, d, base, {5, 20, 64, 200});
  emit_cloud(io, cloud);
  require(full_curves(cloud, 20) >= 5, "fewer than 5 full lines");
  // (c) density through degree 3.
  std::vector<ProjPoint> pts;
  for (const auto& p : cloud.points) pts.push_back(p.point);
  for (const auto& v : density_certificate(pts, 2, 3)) {
    write_record(io.out, record(v));
    require(v.pass, "density certificate failed at degree " + std::to_string(v.degree));
  }
  // (d) the odd family [2k+1:2:2], recorded as computed.
  std::vector<ProjPoint> fam;
  for (long k = 1; k <= 99; k += 2) fam.push_back(ProjPoint::from_integers({2 * k + 1, 2, 2}));
  Json f = record(classify_set(fam, d, {}));
  f["family"] = "[2k+1:2:2], k odd, k <= 99";
  write_record(io.out, f);
  io.err << "seven-points: " << checked << " points all 2-adically close to D; cloud of "
         << pts.size() << " points at levels " << cloud.levels.to_string() << "\n";
}

void demo_finiteness(const Io& io) {
  auto five = enumerate_everywhere_integral(1, parse_levels("inf:2"));
  auto nine = enumerate_everywhere_integral(1, parse_levels("inf:2,2:1"));
  for (const auto* set : {&five, &nine}) {
    Json j;
    j["record"] = "enumeration";
    j["levels"] = set == &five ? "inf:2" : "2:1,inf:2";
    Json pts = Json::array();
    for (const auto& p : *set) pts.push_back(p.to_string());
    j["points"] = std::move(pts);
    j["count"] = set->size();
    write_record(io.out, j);
  }
  require(five.size() == 5, "expected 5 points at t_inf = 2");
  require(nine.size() == 9, "expected 9 points at t_inf = 2, 2:1");
  io.err << "finiteness: " << five.size() << " and " << nine.size() << " points\n";
}

void demo_puncture(const Io& io) {
  Subscheme d = parse_subscheme("point [1:0:0]; point [0:1:0]; point [0:0:1]");
  ProjPoint base = ProjPoint::from_integers({1, 2, 3});
  PointCloud cloud = everywhere_sweep(ProjectiveSpace{2}, d, base, {5, 20, 64, 200});
  emit_cloud(io, cloud);
  require(full_curves(cloud, 20) >= 5, "fewer than 5 full lines");
  std::vector<ProjPoint> pts;
  for (const auto& p : cloud.points) pts.push_back(p.point);
  for (const auto& v : density_certificate(pts, 2, 3)) {
    write_record(io.out, record(v));
    require(v.pass, "density certificate failed at degree " + std::to_string(v.degree));
  }
  io.err << "puncture: " << pts.size() << " points avoiding the coordinate points\n";
}

void demo_surface(const Io& io) {
  EllSurface s = parse_surface("A 2 - t^2; B t^2 + 1; x_num t; y_num t + 1");
  Subscheme d = parse_subscheme("point [1:0:0]; point [0:0:1]; point [1:1:1]");
  std::vector<Rational> ts;
  for (long t = 1; t <= 15; ++t) ts.emplace_back(t);
  FiberSweepResult res = fiber_sweep(s, d, ts, std::monostate{});
  std::size_t admissible = 0;
  for (const auto& f : res.fibers) {
    write_record(io.out, record(f));
    if (!f.skipped && f.certificate && !f.certificate->torsion && f.points.size() >= 5) {
      ++admissible;
    }
  }
  require(admissible >= 10, "fewer than 10 admissible fibers");
  io.err << "surface: " << admissible << " admissible fibers\n";
}

void cmd_demo(const Io& io, const Options& o) {
  if (o.demo == "n-over-1") return demo_n_over_1(io);
  if (o.demo == "seven-points") return demo_seven_points(io);
  if (o.demo == "finiteness") return demo_finiteness(io);
  if (o.demo == "puncture") return demo_puncture(io);
  if (o.demo == "surface") return demo_surface(io);
  throw Error(ErrorCode::PreconditionFailed, "unknown demo '" + o.demo + "'");
}

}  // namespace

std::string load_text(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral points on projective varieties over Q"};
  app.set_config("--config", "", "INI file with one section per subcommand");
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--out", out_path, "write records to this file instead of stdout");

  Options o;
  using Fn = void (*)(const Io&, const Options&);
  Fn chosen = nullptr;
  auto sub = [&](const char* name, const char* help, Fn fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&chosen, fn] { chosen = fn; });
    return s;
  };
  auto subscheme = [&](CLI::App* s) {
    s->add_option("-D,--subscheme", o.subscheme, "subscheme file or inline text");
  };
  auto places = [&](CLI::App* s) {
    s->add_option("-S,--places", o.places, "places list such as inf,2");
  };
  auto levels = [&](CLI::App* s) {
    s->add_option("-L,--levels", o.levels, "levels such as 2:1,inf:4, or minimal");
  };
  auto counts = [&](CLI::App* s) {
    s->add_option("--curves", o.curves, "sections to fill");
    s->add_option("--per-curve", o.per_curve, "points per section");
    s->add_option("--cap", o.cap, "parameter height cap");
    s->add_option("--max-sections", o.max_sections, "section candidates to examine");
    s->add_option("--ambient", o.ambient, "P<n>, quadric or cone");
    s->add_option("--quadric", o.quadric, "quadric form for --ambient quadric");
  };

  auto* weil = sub("weil", "Weil values, support and minimal levels of a point", cmd_weil);
  subscheme(weil);
  places(weil);
  weil->add_option("-P,--point", o.point, "point [a:b:c]")->required();

  auto* verify = sub("verify", "verify points against levels", cmd_verify);
  subscheme(verify);
  places(verify);
  levels(verify);
  verify->add_option("-P,--point", o.point, "single point");
  verify->add_option("--points", o.points, "points file or inline list");

  auto* classify = sub("classify", "the four integrality notions on a point set", cmd_classify);
  subscheme(classify);
  places(classify);
  classify->add_option("--points", o.points, "points file or inline list")->required();

  auto* g0 = sub("search-genus0", "integral points on a parametrized curve", cmd_search_genus0);
  subscheme(g0);
  places(g0);
  levels(g0);
  g0->add_option("--curve", o.curve, "curve file or inline text")->required();
  g0->add_option("--base", o.base, "base parameter (s:t) as [s:t]");
  g0->add_option("--want", o.want, "points wanted");
  g0->add_option("--cap", o.cap, "parameter height cap");
  g0->add_flag("--s-integral", o.s_integral, "S-integral search against --divisor and --avoid");
  g0->add_option("--divisor", o.divisor, "divisor part D'");
  g0->add_option("--avoid", o.avoid, "codimension-two part N");

  auto* ell = sub("search-elliptic", "integral points on y^2 = x^3 + a x + b", cmd_search_elliptic);
  subscheme(ell);
  levels(ell);
  ell->add_option("--a", o.a, "coefficient a")->required();
  ell->add_option("--b", o.b, "coefficient b")->required();
  ell->add_option("--p0", o.p0, "base point x,y")->required();
  ell->add_option("--r", o.r, "generator x,y (default: p0)");
  ell->add_option("--want", o.want, "points wanted");
  ell->add_option("--max-multiple", o.max_multiple, "scan cap");

  auto* sweep = sub("sweep", "everywhere-integral sweep over sections through a point", cmd_sweep);
  subscheme(sweep);
  counts(sweep);
  sweep->add_option("-P,--point", o.point, "base point")->required();
  sweep->add_option("--degree", o.degree, "density certificate degree (0 skips)");

  auto* sweep_s = sub("sweep-s", "S-integral sweep with a divisor of degree <= 2", cmd_sweep_s);
  places(sweep_s);
  counts(sweep_s);
  sweep_s->add_option("--divisor", o.divisor, "divisor part D'")->required();
  sweep_s->add_option("--avoid", o.avoid, "codimension-two part N");
  sweep_s->add_option("-P,--point", o.point, "base point")->required();

  auto* surf = sub("surface-sweep", "fiberwise sweep of an elliptic surface", cmd_surface_sweep);
  subscheme(surf);
  levels(surf);
  surf->add_option("--surface", o.surface, "surface file or inline text")->required();
  surf->add_option("--t", o.t_values, "explicit fiber parameters");
  surf->add_option("--t-from", o.t_from, "first integer fiber");
  surf->add_option("--t-to", o.t_to, "last integer fiber");
  surf->add_option("--per-fiber", o.per_fiber, "points per fiber");
  surf->add_option("--max-multiple", o.max_multiple, "scan cap per fiber");
  surf->add_option("--multiplier", o.multiplier, "section multiplier (0 scans)");

  auto* en = sub("enumerate", "all everywhere {x0=0}-integral points of P^n", cmd_enumerate);
  levels(en);
  en->add_option("-n,--dimension", o.n, "n");

  auto* cert = sub("certify", "density certificate for a point cloud", cmd_certify);
  cert->add_option("--points", o.points, "points file or inline list")->required();
  cert->add_option("--degree", o.degree, "highest degree");

  auto* demo = sub("demo", "n-over-1, seven-points, finiteness, puncture or surface", cmd_demo);
  demo->add_option("name", o.demo, "demo name")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o1, o2;
    int code = app.exit(e, o1, o2);
    out << o1.str();
    err << o2.str();
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
  }
  Io io{out_path.empty() ? out : file, err};
  try {
    chosen(io, o);
  } catch (const DemoFailure& e) {
    err << "demo assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace intpts::cli
