#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace reven {

using i64 = std::int64_t;

// Exact rational scalar.  All core arithmetic in this library is exact;
// doubles appear only in the floating DFT oracle and in the analytic
// estimates, where every conversion point is explicit.
using Rat = mpq_class;

static_assert(sizeof(long) == 8, "LP64 assumed: i64 must fit in a GMP long");

Rat make_rat(i64 num, i64 den = 1);

bool rat_is_integer(const Rat& q);

// Exact conversion; throws InternalError if q is not an integer or does
// not fit in 64 bits.
i64 rat_to_i64(const Rat& q);

double rat_to_double(const Rat& q);

// Canonical form "p/q" with q > 0 and gcd(p, q) = 1, always including
// the denominator ("3/1").  Used by the JSON schema.
std::string rat_canonical(const Rat& q);

// Human form: omits "/1" for integers.
std::string rat_human(const Rat& q);

// Parses "p", "-p", "p/q"; canonicalizes sign and gcd.
// Throws UsageError on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// floor(x / d) for d > 0, exact.
i64 floor_div(const Rat& x, i64 d);

// n^k for k >= 0 (exact), n != 0 allowed negative.
Rat rat_pow(i64 n, int k);

} // namespace reven
