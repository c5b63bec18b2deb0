#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace rcb {

using Int = mpz_class;
/// Arbitrary precision rational, always kept canonical (gcd 1, den > 0).
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q". Rejects zero or negative denominators and
/// non-coprime pairs; the error message names the offending token.
Rat parse_rat(std::string_view token);
std::string to_string(const Rat& value);

int sign(const Rat& value);
Rat midpoint(const Rat& a, const Rat& b);

std::optional<Rat> exact_sqrt(const Rat& value);
inline bool is_square(const Rat& value) { return exact_sqrt(value).has_value(); }

/// Writes a positive rational as y^2 + z^2 with rational y, z.
///
/// Factors numerator*denominator by trial division and finishes with a
/// primality test on the cofactor; a cofactor that is neither 1, a prime
/// nor a square makes the search give up and return nullopt, as does a
/// value that has no such representation.
std::optional<std::pair<Rat, Rat>> two_squares(const Rat& value);

/// A nonzero rational solution of a x^2 + b y^2 + c z^2 = 0, found by
/// Legendre descent. Returns nullopt when there is none, or when factoring
/// a coefficient needs more than trial division plus one prime cofactor.
std::optional<std::array<Rat, 3>> solve_diagonal_conic(const Rat& a, const Rat& b, const Rat& c);

}  // namespace rcb
