#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace intpts {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Prime factorization, prime -> exponent, primes ascending.
using Factorization = std::map<BigInt, unsigned>;

struct FactorOptions {
  /// Trial division runs over all integers below this bound before the
  /// primality test and Pollard-Brent take over.
  unsigned long trial_bound = 1ul << 14;
  unsigned long rho_iterations = 1ul << 22;
};

/// v_p(n) for n != 0.
unsigned valuation(const BigInt& n, const BigInt& p);

/// v_p of a nonzero rational (may be negative).
long valuation(const Rational& q, const BigInt& p);

bool is_prime(const BigInt& n);

/// Factors |n| for n != 0; throws FactorizationFailed when a composite
/// cofactor survives the rho budget.
Factorization factor(const BigInt& n, const FactorOptions& options = {});

/// Removes every factor of the listed primes from |n|.
BigInt strip_primes(BigInt n, const std::set<BigInt>& primes);

/// All positive divisors of the number with the given factorization, ascending.
std::vector<BigInt> divisors(const Factorization& f);

BigInt ipow(const BigInt& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

/// Least r >= 1 with base^r == 1 (mod m); base must be a unit mod m.
BigInt multiplicative_order(const BigInt& base, const BigInt& m);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Exact rational square root when it exists.
bool rational_sqrt(const Rational& q, Rational& root);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

}  // namespace intpts
