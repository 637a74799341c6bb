#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "intpts/arith.hpp"
#include "intpts/error.hpp"
#include "intpts/genus0.hpp"
#include "intpts/projgeom.hpp"
#include "intpts/weil.hpp"

namespace intpts {

/// A rational genus-zero section curve through the sweep's base point.
struct SectionCurve {
  CurveMap map;
  /// Parameter with map.at(base_parameter) == base point.
  ProjPoint base_parameter;
  /// The linear space used to cut the section (hyperplane coefficients or the
  /// line's direction), for provenance.
  std::vector<BigInt> slice;
};

struct ProjectiveSpace {
  std::size_t n = 2;
};

/// Nonsingular quadric surface in P^3 with a marked rational point.
struct QuadricSurface {
  HomForm q;
  ProjPoint marked;
};

/// Caller-supplied sections: for the k-th candidate, return a section
/// through the base point or nullopt when that candidate is not rational.
struct UserSections {
  std::size_t nvars = 0;
  std::function<bool(const ProjPoint&)> contains;
  std::function<std::optional<SectionCurve>(const ProjPoint& base, std::size_t index)> section;
  std::size_t max_index = 1000;
};

using AmbientDescriptor = std::variant<ProjectiveSpace, QuadricSurface, UserSections>;

std::size_t ambient_nvars(const AmbientDescriptor& x);
bool ambient_contains(const AmbientDescriptor& x, const ProjPoint& p);

/// Lines through P on a conic: degree-2 map hitting P. Throws SingularAtP, NotOnVariety, or
/// PreconditionFailed when the conic is a line pair.
CurveMap conic_param(const HomForm& q, const ProjPoint& p);

/// Parametrization of the plane section {hyperplane = 0} of a quadric through
/// P; nullopt when that section is singular at P.
std::optional<SectionCurve> quadric_section(const HomForm& q, const ProjPoint& p,
                                            const std::vector<BigInt>& hyperplane);

/// Cone over a conic, {x0 x2 = x1^2} in P^3, with vertex (0:0:0:1): the worked
/// UserSections fixture, sections cut by hyperplanes through P.
UserSections conic_cone_sections();

/// Up to `howmany` sections through P avoiding D, enumerated by slope height.
/// Throws OnSubscheme if P lies on D, NotOnVariety if P is not on X.
std::vector<SectionCurve> section_curves(const AmbientDescriptor& x, const ProjPoint& p,
                                         const Subscheme& d, std::size_t howmany,
                                         std::size_t max_candidates = 5000);

struct CloudPoint {
  ProjPoint point;
  std::size_t curve_index = 0;
  std::optional<ProjPoint> parameter;
  LevelVector levels;
  PlaceSet exempt;
  WeilReport report;
};

struct CurveDiagnostic {
  std::size_t curve_index = 0;
  std::string curve;
  std::optional<ErrorCode> error;
  std::string message;
  std::size_t found = 0;
  std::string kind;
};

struct PointCloud {
  std::vector<CloudPoint> points;
  std::vector<CurveDiagnostic> curves;
  LevelVector levels;
};

struct SweepConfig {
  std::size_t curves = 5;
  std::size_t per_curve = 20;
  std::size_t cap = 64;
  /// Section candidates examined before giving up on reaching `curves`.
  std::size_t max_sections = 200;
};

/// Fixes levels = minimal_levels(D, P) once and runs a genus-zero search on
/// each D-avoiding section through P. Throws CodimTooSmall when D has a
/// codimension-one component.
PointCloud everywhere_sweep(const AmbientDescriptor& x, const Subscheme& d, const ProjPoint& p,
                            const SweepConfig& config = {});

/// Sections avoid N only; each section is dispatched on its punctures against D'.
PointCloud s_integral_sweep(const AmbientDescriptor& x, const Subscheme& dprime,
                            const Subscheme& n, const PlaceSet& s, const ProjPoint& p,
                            const SweepConfig& config = {});

/// Complete list of everywhere {x0 = 0}-integral points of P^n at the given levels.
std::vector<ProjPoint> enumerate_everywhere_integral(std::size_t n, const LevelVector& levels);

struct DegreeVerdict {
  unsigned degree = 0;
  bool pass = false;
  std::size_t rank = 0;
  std::size_t expected = 0;
};

/// For each degree 1..d, PASS iff no nonzero form of that degree vanishes on
/// the cloud, decided by exact rank of the evaluation matrix.
std::vector<DegreeVerdict> density_certificate(std::span<const ProjPoint> cloud, std::size_t n,
                                               unsigned d);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

/// Exponent vectors of all monomials of degree d in nvars variables, lex descending.
std::vector<Exponents> monomials(std::size_t nvars, unsigned d);

}  // namespace intpts
