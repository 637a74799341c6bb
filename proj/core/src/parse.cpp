#include "intpts/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "intpts/error.hpp"

namespace intpts {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

// Logical lines: split on newlines and ';', comments stripped, blanks dropped.
std::vector<std::string_view> logical_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      std::string_view line = text.substr(start, i - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) out.push_back(line);
      start = i + 1;
    }
  }
  return out;
}

std::pair<std::string_view, std::string_view> key_value(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=' &&
         line[i] != '[') {
    ++i;
  }
  std::string_view key = line.substr(0, i);
  std::string_view rest = trim(line.substr(i));
  if (!rest.empty() && rest.front() == '=') rest = trim(rest.substr(1));
  return {key, rest};
}

using RPoly = std::map<Exponents, Rational>;

void add_into(RPoly& a, const RPoly& b, int sign) {
  for (const auto& [e, c] : b) {
    Rational& slot = a[e];
    slot += sign > 0 ? c : Rational(-c);
    if (slot == 0) a.erase(e);
  }
}

RPoly mul(const RPoly& a, const RPoly& b) {
  RPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  RPoly parse() {
    RPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' in polynomial");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  RPoly constant(const Rational& c) {
    RPoly p;
    if (c != 0) p[Exponents(vars_.size(), 0)] = c;
    return p;
  }

  RPoly expr() {
    RPoly acc = term();
    while (true) {
      if (eat('+')) {
        add_into(acc, term(), 1);
      } else if (eat('-')) {
        add_into(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  RPoly term() {
    RPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc = mul(acc, unary());
      } else if (eat('/')) {
        RPoly d = unary();
        if (d.size() != 1 || d.begin()->first != Exponents(vars_.size(), 0)) {
          fail("division by a non-constant");
        }
        Rational inv = 1 / d.begin()->second;
        for (auto& [e, c] : acc) c *= inv;
      } else if (at_atom_start()) {
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  RPoly unary() {
    if (eat('-')) {
      RPoly p = unary();
      for (auto& [e, c] : p) c = -c;
      return p;
    }
    if (eat('+')) return unary();
    return power();
  }

  RPoly power() {
    RPoly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent after '^'");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      RPoly out = constant(1);
      for (unsigned long i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  RPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    if (eat('(')) {
      RPoly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    // Longest variable name matching here.
    std::size_t best = vars_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > best_len && text_.substr(pos_, v.size()) == v) {
        best = i;
        best_len = v.size();
      }
    }
    if (best == vars_.size()) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best_len;
    Exponents e(vars_.size(), 0);
    e[best] = 1;
    return RPoly{{e, Rational(1)}};
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string> coordinate_names(std::size_t nvars) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

// Scales a rational polynomial to a primitive integer one.
MPoly clear_denominators(const RPoly& p, std::size_t nvars) {
  BigInt l = 1;
  for (const auto& [e, c] : p) l = lcm(l, c.get_den());
  MPoly out(nvars);
  for (const auto& [e, c] : p) {
    Rational v = c * l;
    out.add_term(e, v.get_num());
  }
  return out;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) fail("bad integer '" + std::string(text) + "'");
  return v;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(text.substr(0, slash)), den);
  q.canonicalize();
  return q;
}

ProjPoint parse_point(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    fail("point must look like [a:b:c], got '" + std::string(text) + "'");
  }
  std::vector<Rational> coords;
  for (auto part : split(text.substr(1, text.size() - 2), ':')) coords.push_back(parse_rational(part));
  if (coords.size() < 2) fail("point needs at least two coordinates");
  return ProjPoint::from_rationals(coords);
}

std::vector<ProjPoint> parse_points(std::string_view text) {
  std::vector<ProjPoint> out;
  for (auto line : logical_lines(text)) out.push_back(parse_point(line));
  return out;
}

std::map<Exponents, Rational> parse_rational_poly(std::string_view text,
                                                  const std::vector<std::string>& vars) {
  if (trim(text).empty()) fail("empty polynomial");
  return PolyParser(text, vars).parse();
}

MPoly parse_mpoly(std::string_view text, std::size_t nvars) {
  return clear_denominators(parse_rational_poly(text, coordinate_names(nvars)), nvars);
}

HomForm parse_form(std::string_view text, std::size_t nvars) {
  MPoly p = parse_mpoly(text, nvars);
  if (p.is_zero()) fail("form is zero");
  if (!p.homogeneous_degree()) fail("form '" + std::string(trim(text)) + "' is not homogeneous");
  return HomForm(std::move(p));
}

BinaryForm parse_binary_form(std::string_view text, unsigned degree) {
  const std::vector<std::string> vars{"s", "t"};
  RPoly p = parse_rational_poly(text, vars);
  for (const auto& [e, c] : p) {
    if (c.get_den() != 1) fail("binary form coefficients must be integers");
    if (e[0] + e[1] != degree) {
      fail("term of degree " + std::to_string(e[0] + e[1]) + " in a degree " +
           std::to_string(degree) + " form");
    }
  }
  std::vector<BigInt> coeffs(degree + 1, BigInt(0));
  for (const auto& [e, c] : p) coeffs[e[1]] = c.get_num();
  return BinaryForm(degree, std::move(coeffs));
}

QPoly parse_qpoly(std::string_view text, const std::string& var) {
  const std::vector<std::string> vars{var};
  RPoly p = parse_rational_poly(text, vars);
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p) {
    if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
    coeffs[e[0]] = c;
  }
  return QPoly(std::move(coeffs));
}

Subscheme parse_subscheme(std::string_view text) {
  std::optional<std::size_t> nvars;
  std::optional<unsigned> codim;
  std::vector<ProjPoint> points;
  std::vector<std::string> components;
  for (auto line : logical_lines(text)) {
    auto [key, rest] = key_value(line);
    if (key == "nvars") {
      nvars = static_cast<std::size_t>(parse_integer(rest).get_ui());
    } else if (key == "codim") {
      codim = static_cast<unsigned>(parse_integer(rest).get_ui());
    } else if (key == "point") {
      points.push_back(parse_point(rest));
    } else if (key == "component") {
      components.emplace_back(rest);
    } else if (key == "empty") {
      // explicit empty subscheme
    } else {
      fail("unknown subscheme key '" + std::string(key) + "'");
    }
  }
  if (!nvars) {
    if (points.empty()) fail("subscheme needs 'nvars'");
    nvars = points.front().size();
  }
  for (const auto& p : points) {
    if (p.size() != *nvars) fail("point " + p.to_string() + " has the wrong arity");
  }
  Subscheme out = points.empty() ? Subscheme::empty(*nvars) : points_subscheme(points);
  if (!components.empty()) {
    std::vector<GeneratorSet> comps;
    for (const auto& c : components) {
      GeneratorSet gens;
      for (auto g : split(c, ',')) gens.push_back(parse_form(g, *nvars));
      comps.push_back(std::move(gens));
    }
    std::optional<unsigned> forms_codim = codim;
    if (!forms_codim && comps.size() == 1 && comps.front().size() == 1) forms_codim = 1;
    Subscheme forms(*nvars, std::move(comps), forms_codim);
    out = points.empty() ? forms : out.unite(forms);
  }
  if (codim) out = Subscheme(*nvars, out.components(), codim);
  return out;
}

CurveMap parse_curve(std::string_view text) {
  std::optional<unsigned> degree;
  std::vector<std::string> forms;
  for (auto line : logical_lines(text)) {
    auto [key, rest] = key_value(line);
    if (key == "degree") {
      degree = static_cast<unsigned>(parse_integer(rest).get_ui());
    } else if (key == "form") {
      forms.emplace_back(rest);
    } else {
      fail("unknown curve key '" + std::string(key) + "'");
    }
  }
  if (!degree) fail("curve needs 'degree'");
  if (forms.size() < 2) fail("curve needs at least two forms");
  std::vector<BinaryForm> bf;
  for (const auto& f : forms) bf.push_back(parse_binary_form(f, *degree));
  return CurveMap(std::move(bf));
}

EllSurface parse_surface(std::string_view text) {
  std::map<std::string, QPoly> fields;
  for (auto line : logical_lines(text)) {
    auto [key, rest] = key_value(line);
    std::string k(key);
    if (k != "A" && k != "B" && k != "x_num" && k != "x_den" && k != "y_num" && k != "y_den") {
      fail("unknown surface key '" + k + "'");
    }
    fields[k] = parse_qpoly(rest, "t");
  }
  for (const char* k : {"A", "B", "x_num", "y_num"}) {
    if (!fields.count(k)) fail(std::string("surface needs '") + k + "'");
  }
  auto den = [&](const char* k) { return fields.count(k) ? fields[k] : QPoly::constant(1); };
  if (den("x_den").is_zero() || den("y_den").is_zero()) fail("zero section denominator");
  return EllSurface(fields["A"], fields["B"], RatFunc(fields["x_num"], den("x_den")),
                    RatFunc(fields["y_num"], den("y_den")));
}

LevelVector parse_levels(std::string_view text) {
  LevelVector out;
  text = trim(text);
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    item = trim(item);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) fail("level entry '" + std::string(item) + "' needs ':'");
    std::string_view place = trim(item.substr(0, colon));
    std::string_view value = item.substr(colon + 1);
    if (place == "inf") {
      Rational t = parse_rational(value);
      if (t < 0) fail("archimedean level must be nonnegative");
      out.arch = t;
    } else {
      BigInt p = parse_integer(place);
      if (!is_prime(p)) fail(p.get_str() + " is not prime");
      BigInt e = parse_integer(value);
      if (e < 0) fail("finite level must be nonnegative");
      if (e > 0) out.finite[p] = static_cast<unsigned>(e.get_ui());
    }
  }
  return out;
}

PlaceSet parse_places(std::string_view text) {
  PlaceSet out;
  text = trim(text);
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    item = trim(item);
    if (item == "inf") {
      out.insert(Place::arch());
    } else {
      BigInt p = parse_integer(item);
      if (!is_prime(p)) fail(p.get_str() + " is not prime");
      out.insert(Place::finite(p));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace intpts
