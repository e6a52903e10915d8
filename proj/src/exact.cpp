#include "parkfn/exact.hpp"

#include "parkfn/error.hpp"

namespace parkfn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotParkingFunction: return "NotParkingFunction";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoZeroEntry: return "NoZeroEntry";
    case ErrorKind::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::ConventionUndefined: return "ConventionUndefined";
    case ErrorKind::ZeroToNegative: return "ZeroToNegative";
    case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    case ErrorKind::NonMonotoneWeights: return "NonMonotoneWeights";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

namespace exact {

BigInt from_natural(std::uint64_t x) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return r;
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (long i = 0; i < k; ++i) num *= n - i;
  return num / factorial(static_cast<unsigned long>(k));
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigRational rising_factorial(const BigInt& x, long n) {
  if (n < -1) {
    throw Error(ErrorKind::InvalidArgument, "rising factorial exponent below -1");
  }
  if (n == -1) {
    if (x == 1) {
      throw Error(ErrorKind::ConventionUndefined, "x^(-1) := 1/(x-1) is undefined at x = 1");
    }
    BigRational r(BigInt(1), BigInt(x - 1));
    r.canonicalize();
    return r;
  }
  BigInt product = 1;
  for (long i = 0; i < n; ++i) product *= x + i;
  return BigRational(product);
}

BigRational power(const BigInt& x, long n) {
  if (n >= 0) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRational(result);
  }
  if (x == 0) throw Error(ErrorKind::ZeroToNegative, "0 raised to a negative power");
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-n));
  BigRational result(BigInt(1), denom);
  result.canonicalize();
  return result;
}

BigInt require_integer(const BigRational& value, const char* context) {
  BigRational v = value;
  v.canonicalize();
  if (v.get_den() != 1) {
    throw Error(ErrorKind::NonIntegralResult,
                std::string(context) + " evaluated to " + v.get_str());
  }
  return v.get_num();
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRational& value) {
  BigRational v = value;
  v.canonicalize();
  return v.get_str(10);
}

}  // namespace exact
}  // namespace parkfn
