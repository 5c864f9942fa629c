#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace crn {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

/// base^e with exact arithmetic; e may be negative (base must be nonzero then).
Rat pow_rat(const Rat& base, long e);

/// Exact n-th root of a positive rational, if one exists.
std::optional<Rat> rat_root(const Rat& x, unsigned long n);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& x);

/// Accepts "p/q", plain integers, and decimal literals (e.g. "0.25", "1.5e-3").
/// Decimals are converted exactly. Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

}  // namespace crn
