#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

// Exact integer and rational arithmetic for the counting formulas. Every
// division goes through BigRational and is converted back with
// require_integer(), so a formula applied outside its domain fails loudly
// instead of truncating.

namespace parkfn {

using BigInt = mpz_class;
using BigRational = mpq_class;

namespace exact {

/// Lossless conversion; mpz_class has no 64-bit constructor on every platform.
BigInt from_natural(std::uint64_t x);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for any
/// integer n (negative n follows the falling-factorial definition).
BigInt binomial(const BigInt& n, long k);

BigInt factorial(unsigned long n);

/// Rising factorial x(x+1)...(x+n-1) for n >= 0, and 1/(x-1) for n = -1.
/// Throws ConventionUndefined at (x, n) = (1, -1).
BigRational rising_factorial(const BigInt& x, long n);

/// x^n with 0^0 = 1 and exact reciprocals for n < 0.
/// Throws ZeroToNegative for x = 0, n < 0.
BigRational power(const BigInt& x, long n);

/// Returns the value as an integer or throws NonIntegralResult.
BigInt require_integer(const BigRational& value, const char* context);

std::string to_decimal(const BigInt& value);
std::string to_string(const BigRational& value);

}  // namespace exact
}  // namespace parkfn
