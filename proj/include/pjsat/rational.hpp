#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace pjsat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binary length of a non-negative integer; the size of 0 is 1.
std::size_t size_of(const Integer& n);

/// |num| + |den| of the reduced form. Negative values are measured by magnitude.
std::size_t size_of(const Rational& r);

/// Builds a canonical rational n/d. Throws std::invalid_argument when d == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses `digits` or `digits/digits` (optionally signed). Returns the reduced value.
Rational parse_rational(std::string_view text);

/// `n/d` always, including integers (`1/1`).
std::string to_fraction_string(const Rational& r);

/// `n` for integers, `n/d` otherwise.
std::string to_string(const Rational& r);

// The small-solution size bound 2*(r*l + r*log2(r) + 1) involves log2, so it is
// decided exactly: size <= 2rl + 2 + 2r*log2(r)  <=>  2^(size - 2rl - 2) <= r^(2r).
bool within_size_bound(std::size_t size, std::size_t rows, std::size_t coeff_size);

/// Floating approximation of the same bound, for reports only.
double size_bound_value(std::size_t rows, std::size_t coeff_size);

}  // namespace pjsat
