#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bbg {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Accepts "p", "p/q" and finite decimals such as "-1.25". Throws InputError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Scales a rational vector to the primitive integer vector on the same ray.
// The zero vector maps to the zero vector.
IntegerVector primitive_integer_vector(const RationalVector& v);

}  // namespace bbg
