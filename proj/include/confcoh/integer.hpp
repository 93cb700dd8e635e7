#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace confcoh {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

/// Binomial coefficient; zero when k < 0 or k > n, and for negative n uses the
/// generalised definition n(n-1)...(n-k+1)/k!.
Integer binomial(long n, long k);

/// Narrowing conversion; throws confcoh::Error when the value does not fit.
std::int64_t to_int64(const Integer& x);

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace confcoh
