#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intpts/elliptic.hpp"
#include "intpts/genus0.hpp"
#include "intpts/poly.hpp"
#include "intpts/projgeom.hpp"
#include "intpts/weil.hpp"

// Text fixture formats. Every parser throws Error(ParseError) on malformed input.
//
//   point       [a:b:c]            entries are integers or p/q
//   polynomial  3*x0^2 - x1 x2     + - * / ^ ( ), implicit products; / only by constants
//   subscheme   lines of:  nvars N | codim K | point [..] | component f, g, ...
//   curve       lines of:  degree D | form <binary form in s,t>
//   surface     lines of:  A <p(t)> | B <p(t)> | x_num | x_den | y_num | y_den
//
// Lines may also be separated by ';' and '#' starts a comment.

namespace intpts {

Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

ProjPoint parse_point(std::string_view text);
/// One point per line (or ';'-separated).
std::vector<ProjPoint> parse_points(std::string_view text);

/// Polynomial over Q in the given variables; denominators are kept.
std::map<Exponents, Rational> parse_rational_poly(std::string_view text,
                                                  const std::vector<std::string>& vars);

/// Integer polynomial in x0..x{nvars-1}; rational coefficients are cleared.
MPoly parse_mpoly(std::string_view text, std::size_t nvars);
HomForm parse_form(std::string_view text, std::size_t nvars);
/// Binary form in s, t of the given degree (or the zero form).
BinaryForm parse_binary_form(std::string_view text, unsigned degree);
/// Univariate polynomial in `var`.
QPoly parse_qpoly(std::string_view text, const std::string& var = "t");

Subscheme parse_subscheme(std::string_view text);
CurveMap parse_curve(std::string_view text);
EllSurface parse_surface(std::string_view text);

/// "2:1,3:2,inf:5/2"; the empty string means trivial finite levels and no arch level.
LevelVector parse_levels(std::string_view text);
/// "inf,2,3"
PlaceSet parse_places(std::string_view text);

/// Reads a whole file, throwing ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace intpts
