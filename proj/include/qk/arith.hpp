#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace qk {

using BigNat = mpz_class;

/// A natural number together with its complete prime factorization.
struct FactoredNat {
    BigNat value;
    std::map<BigNat, unsigned> factors;  // prime -> exponent, keys ascending
};

/// Miller-Rabin with a fixed deterministic base set (exact below 2^64,
/// overwhelmingly reliable for the <= 2^128 inputs this library handles).
bool is_prime(const BigNat& n);

/// Trial division to 10^6, then Brent-Pollard rho splitting.
/// Requires n >= 2.
FactoredNat factorize_nat(const BigNat& n);

/// Primes r with r | q^m - 1 and r not dividing q^i - 1 for 1 <= i < m,
/// i.e. primes modulo which q has multiplicative order exactly m.
/// Ascending; may be empty (Zsigmondy exceptions such as q=2, m=6).
std::vector<BigNat> ppd_primes(const BigNat& q, unsigned m);

/// Largest power of the prime r dividing n (1 when r does not divide n).
BigNat r_part(const BigNat& n, const BigNat& r);

/// Euler totient, via the factorization of m.
BigNat euler_phi(const BigNat& m);

/// b^e for an unsigned machine exponent.
BigNat pow_nat(const BigNat& b, unsigned long e);

}  // namespace qk
