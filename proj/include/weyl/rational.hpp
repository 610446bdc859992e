#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weyl {

using Rational = mpq_class;
using Int = mpz_class;

// Raised when caller input violates a documented precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal cross-check disagrees; indicates a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p" or "p/q" already in lowest terms with q > 0.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
std::int64_t to_int64(const Int& z);
std::int64_t to_int64(const Rational& q);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace weyl
