#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace walgebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact "num/den" form; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "a", "-a", "a/b". Throws InputError on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical num/den; mpq_class(num, den) alone is not canonicalized.
inline Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Dense rational vector; used for Lie algebra elements and t^e-weights.
using RationalVector = std::vector<Rational>;

bool is_zero(const RationalVector& v);

}  // namespace walgebra
