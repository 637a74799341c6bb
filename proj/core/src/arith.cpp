#include "intpts/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "intpts/error.hpp"

namespace intpts {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OnSubscheme: return "OnSubscheme";
    case ErrorCode::MissingArchLevel: return "MissingArchLevel";
    case ErrorCode::IntersectsD: return "IntersectsD";
    case ErrorCode::IntersectsN: return "IntersectsN";
    case ErrorCode::BaseNotIntegral: return "BaseNotIntegral";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::NoPunctures: return "NoPunctures";
    case ErrorCode::TooManyPunctures: return "TooManyPunctures";
    case ErrorCode::IrrationalPunctures: return "IrrationalPunctures";
    case ErrorCode::UnitsFinite: return "UnitsFinite";
    case ErrorCode::TorsionGenerator: return "TorsionGenerator";
    case ErrorCode::TorsionSpecialization: return "TorsionSpecialization";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::SingularFiber: return "SingularFiber";
    case ErrorCode::SectionPole: return "SectionPole";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::SingularAtP: return "SingularAtP";
    case ErrorCode::NotOnVariety: return "NotOnVariety";
    case ErrorCode::CodimTooSmall: return "CodimTooSmall";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::MeetsIdentitySection: return "MeetsIdentitySection";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  BigInt m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rational& q, const BigInt& p) {
  return static_cast<long>(valuation(q.get_num(), p)) -
         static_cast<long>(valuation(q.get_den(), p));
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
BigInt rho_factor(const BigInt& n, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 32; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, spent = 0;
    const unsigned long m = 128;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      }
      spent += r;
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_into(const BigInt& n, Factorization& out, const FactorOptions& options) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = rho_factor(n, options.rho_iterations);
  if (d == 0) {
    throw Error(ErrorCode::FactorizationFailed,
                "could not split composite cofactor " + n.get_str());
  }
  factor_into(d, out, options);
  factor_into(BigInt(n / d), out, options);
}

}  // namespace

Factorization factor(const BigInt& n, const FactorOptions& options) {
  if (n == 0) throw std::invalid_argument("factor of zero");
  Factorization out;
  BigInt m = abs(n);
  for (unsigned long p = 2; p < options.trial_bound && m > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[BigInt(p)];
    }
  }
  if (m > 1) {
    Factorization rest;
    factor_into(m, rest, options);
    for (const auto& [p, e] : rest) out[p] += e;
  }
  return out;
}

BigInt strip_primes(BigInt n, const std::set<BigInt>& primes) {
  n = abs(n);
  if (n == 0) return n;
  for (const auto& p : primes) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    }
  }
  return n;
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

BigInt multiplicative_order(const BigInt& base, const BigInt& m) {
  if (m == 1) return 1;
  if (gcd(base, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  BigInt b = base % m;
  if (b < 0) b += m;
  BigInt acc = b;
  BigInt r = 1;
  while (acc != 1) {
    acc = (acc * b) % m;
    ++r;
  }
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  root = Rational(sqrt(q.get_num()), sqrt(q.get_den()));
  root.canonicalize();
  return true;
}

std::string to_string(const BigInt& n) { return n.get_str(); }
std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace intpts
