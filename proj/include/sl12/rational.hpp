#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sl12 {

/// Exact rational scalar used throughout the library.
/// All arithmetic is arbitrary precision; never feed unreduced fractions to
/// std::map keys without canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// q^e for integer e (e < 0 requires q != 0).
Rat rat_pow(const Rat& q, long e);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

/// Parse "p", "-p", "p/q" (q > 0 after sign normalization). Rejects empty,
/// malformed, and zero denominators.
std::optional<Rat> parse_rat(const std::string& s);

/// Canonical "p" or "p/q" rendering (matches mpq_class::get_str).
std::string rat_str(const Rat& q);

}  // namespace sl12
