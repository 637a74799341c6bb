#include "intpts/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "intpts/error.hpp"

namespace intpts {

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(std::size_t nvars, const BigInt& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("MPoly::variable");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void MPoly::add_term(const Exponents& exps, const BigInt& coeff) {
  if (exps.size() != nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "monomial arity does not match polynomial");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<unsigned> MPoly::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

unsigned MPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

BigInt MPoly::evaluate(std::span<const BigInt> values) const {
  if (values.size() != nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong arity");
  }
  BigInt sum = 0;
  BigInt term;
  BigInt power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), values[i].get_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

BigInt MPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

MPoly MPoly::operator-() const {
  MPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "MPoly arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "MPoly arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "MPoly arity mismatch");
  MPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly out = constant(nvars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

MPoly MPoly::scaled(const BigInt& c) const {
  MPoly out(nvars_);
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

MPoly MPoly::divided_exact(const BigInt& c) const {
  MPoly out(nvars_);
  for (const auto& [e, x] : terms_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    out.add_term(e, q);
  }
  return out;
}

namespace {

void append_signed_term(std::ostringstream& os, bool first, const BigInt& c,
                        const std::string& monomial) {
  BigInt mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << monomial;
  } else {
    os << mag.get_str() << "*" << monomial;
  }
}

}  // namespace

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    append_signed_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

bool QPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

QPoly QPoly::operator-() const { return scaled(-1); }

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& x : out) x *= c;
  return QPoly(std::move(out));
}

QPoly QPoly::pow(unsigned e) const {
  QPoly out = constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw std::domain_error("QPoly division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.leading();
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly operator/(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  QPoly::divmod(a, b, q, r);
  return q;
}

QPoly operator%(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  QPoly::divmod(a, b, q, r);
  return r;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Rational lc = den_.leading();
  num_ = num_.scaled(1 / lc);
  den_ = den_.scaled(1 / lc);
}

std::optional<Rational> RatFunc::evaluate(const Rational& t) const {
  Rational d = den_.evaluate(t);
  if (d == 0) return std::nullopt;
  return num_.evaluate(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(unsigned degree) : degree_(degree), coeffs_(degree + 1, BigInt(0)) {}

BinaryForm::BinaryForm(unsigned degree, std::vector<BigInt> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != degree_ + 1u) {
    throw Error(ErrorCode::InvalidForm, "binary form needs degree+1 coefficients");
  }
}

BinaryForm BinaryForm::s() { return BinaryForm(1, {BigInt(1), BigInt(0)}); }
BinaryForm BinaryForm::t() { return BinaryForm(1, {BigInt(0), BigInt(1)}); }
BinaryForm BinaryForm::constant(const BigInt& c) { return BinaryForm(0, {c}); }

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

BigInt BinaryForm::evaluate(const BigInt& s, const BigInt& t) const {
  // Horner in s/t, homogenized: sum c_i s^(d-i) t^i.
  BigInt acc = 0;
  BigInt tpow = 1;
  std::vector<BigInt> spow(degree_ + 1);
  spow[0] = 1;
  for (unsigned i = 1; i <= degree_; ++i) spow[i] = spow[i - 1] * s;
  for (unsigned i = 0; i <= degree_; ++i) {
    acc += coeffs_[i] * spow[degree_ - i] * tpow;
    tpow *= t;
  }
  return acc;
}

BigInt BinaryForm::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = intpts::gcd(g, c);
  return g;
}

BinaryForm BinaryForm::primitive() const {
  BigInt g = content();
  if (g == 0) return *this;
  for (const auto& c : coeffs_) {
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  }
  BinaryForm out(*this);
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

unsigned BinaryForm::multiplicity_at_infinity() const {
  unsigned m = 0;
  while (m <= degree_ && coeffs_[m] == 0) ++m;
  return m;
}

QPoly BinaryForm::dehomogenize() const {
  std::vector<Rational> out(degree_ + 1);
  for (unsigned i = 0; i <= degree_; ++i) out[degree_ - i] = Rational(coeffs_[i]);
  return QPoly(std::move(out));
}

BinaryForm BinaryForm::homogenize(const QPoly& p, unsigned degree) {
  if (p.degree() > static_cast<int>(degree)) {
    throw std::invalid_argument("homogenize: degree too small");
  }
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<BigInt> coeffs(degree + 1, BigInt(0));
  for (unsigned i = 0; i <= degree; ++i) {
    Rational c = p.coeff(degree - i) * den;
    coeffs[i] = c.get_num();
  }
  return BinaryForm(degree, std::move(coeffs)).primitive();
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm out(degree_ + o.degree_);
  for (unsigned i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j <= o.degree_; ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    throw Error(ErrorCode::InvalidForm, "adding binary forms of different degree");
  }
  BinaryForm out(*this);
  for (unsigned i = 0; i <= degree_; ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o.scaled(-1); }

BinaryForm BinaryForm::scaled(const BigInt& c) const {
  BinaryForm out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm out = constant(1);
  BinaryForm base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

BinaryForm BinaryForm::derivative_s() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm out(degree_ - 1);
  for (unsigned i = 0; i < degree_; ++i) out.coeffs_[i] = coeffs_[i] * (degree_ - i);
  return out;
}

BinaryForm BinaryForm::derivative_t() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm out(degree_ - 1);
  for (unsigned i = 1; i <= degree_; ++i) out.coeffs_[i - 1] = coeffs_[i] * i;
  return out;
}

BinaryForm BinaryForm::substitute(const ParamChange& m) const {
  const BinaryForm sub_s(1, {m.a, m.b});
  const BinaryForm sub_t(1, {m.c, m.d});
  std::vector<BinaryForm> spow{constant(1)}, tpow{constant(1)};
  for (unsigned i = 1; i <= degree_; ++i) {
    spow.push_back(spow.back() * sub_s);
    tpow.push_back(tpow.back() * sub_t);
  }
  BinaryForm out(degree_);
  for (unsigned i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    out = out + (spow[degree_ - i] * tpow[i]).scaled(coeffs_[i]);
  }
  return out;
}

std::string BinaryForm::to_string() const {
  MPoly p(2);
  for (unsigned i = 0; i <= degree_; ++i) p.add_term({degree_ - i, i}, coeffs_[i]);
  return p.to_string({"s", "t"});
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero forms");
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  const unsigned m = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  QPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  return BinaryForm::homogenize(g, static_cast<unsigned>(g.degree()) + m);
}

BinaryForm exact_quotient(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient by zero form");
  if (b.degree() > a.degree()) throw std::invalid_argument("exact_quotient: degree");
  QPoly q, r;
  QPoly::divmod(a.dehomogenize(), b.dehomogenize(), q, r);
  if (!r.is_zero() || a.multiplicity_at_infinity() < b.multiplicity_at_infinity()) {
    throw std::invalid_argument("exact_quotient: not divisible");
  }
  return BinaryForm::homogenize(q, a.degree() - b.degree());
}

BinaryForm squarefree_part(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of zero form");
  const unsigned m = f.multiplicity_at_infinity();
  QPoly p = f.dehomogenize();
  QPoly sq = p / gcd(p, p.derivative());
  return BinaryForm::homogenize(sq, static_cast<unsigned>(sq.degree()) + (m > 0 ? 1u : 0u));
}

BinaryForm compose(const MPoly& g, const std::vector<BinaryForm>& forms) {
  if (forms.size() != g.nvars()) {
    throw Error(ErrorCode::DimensionMismatch, "compose: arity mismatch");
  }
  const unsigned d = forms.empty() ? 0 : forms.front().degree();
  const auto deg = g.homogeneous_degree();
  if (!deg) throw Error(ErrorCode::InvalidForm, "compose needs a nonzero homogeneous polynomial");
  std::vector<std::vector<BinaryForm>> powers(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) powers[i].push_back(BinaryForm::constant(1));
  BinaryForm out((*deg) * d);
  for (const auto& [e, c] : g.terms()) {
    BinaryForm term = BinaryForm::constant(c);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * forms[i]);
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    out = out + term;
  }
  return out;
}

}  // namespace intpts
