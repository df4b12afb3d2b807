#ifndef JINF_NUMERIC_HPP
#define JINF_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace jinf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(Rational const &q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(Rational const &q) { return boost::multiprecision::denominator(q); }

/// Exact "num/den" (or plain integer) rendering.
std::string to_string(Rational const &q);
std::string to_string(Integer const &z);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string const &text);

/// p-adic valuation of a nonzero integer.
int valuation(Integer z, Integer const &p);
/// p-adic valuation of a nonzero rational.
int valuation(Rational const &q, Integer const &p);

bool is_prime(std::int64_t n);

/// Modular arithmetic helpers over machine words (moduli < 2^31).
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inv(std::int64_t a, std::int64_t mod);
std::int64_t primitive_root(std::int64_t prime);

} // namespace jinf

#endif
