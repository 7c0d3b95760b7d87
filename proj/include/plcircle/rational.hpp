/*
 * Exact rational scalars, backed by GMP.
 *
 * Every geometric quantity in this library is an exact rational; there is
 * no floating point anywhere in the computation path.  Rationals are kept
 * in lowest terms with positive denominator (mpq canonical form).
 */

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace plc {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p" (arbitrary precision, optional sign).  Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// True iff q lies in Z[1/2], i.e. its reduced denominator is a power of two.
bool is_dyadic(const Rational& q);

// If q == 2^k for some integer k (possibly negative), returns k.
std::optional<long> exact_log2(const Rational& q);

Int floor_int(const Rational& q);

// q reduced mod 1 into [0,1).
Rational mod1(const Rational& q);

}  // namespace plc
