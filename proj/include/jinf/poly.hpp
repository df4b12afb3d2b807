#ifndef JINF_POLY_HPP
#define JINF_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jinf/matrix.hpp"
#include "jinf/numeric.hpp"

namespace jinf {

/// Coefficients, constant term first, no trailing zeros (zero = empty).
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;
/// Polynomial over F_p with coefficients in [0, p).
using FpPoly = std::vector<std::int64_t>;

QPoly trimmed(QPoly f);
int degree(QPoly const &f);
QPoly operator+(QPoly const &a, QPoly const &b);
QPoly operator-(QPoly const &a, QPoly const &b);
QPoly operator*(QPoly const &a, QPoly const &b);
QPoly scaled(QPoly const &f, Rational const &c);
/// Quotient and remainder; throws on division by zero.
std::pair<QPoly, QPoly> divmod(QPoly const &a, QPoly const &b);
QPoly monic(QPoly const &f);
/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
/// (g, s, t) with s a + t b = g = gcd(a, b).
struct Bezout
{
  QPoly g, s, t;
};
Bezout extended_gcd(QPoly const &a, QPoly const &b);
QPoly derivative(QPoly const &f);
Rational evaluate(QPoly const &f, Rational const &x);
/// f(x + c).
QPoly shifted(QPoly const &f, Rational const &c);
bool is_squarefree(QPoly const &f);
std::string poly_to_string(QPoly const &f, std::string const &var = "x");
QPoly from_integers(std::vector<long> const &coeffs);

/// Primitive integer polynomial with positive leading coefficient and the
/// same roots.
ZPoly primitive_part(QPoly const &f);
QPoly to_qpoly(ZPoly const &f);

/// Monic irreducible factors over Q with multiplicities, sorted by degree
/// then coefficients. Zassenhaus: Berlekamp mod p, Hensel lifting,
/// recombination.
std::vector<std::pair<QPoly, int>> factor_over_Q(QPoly const &f);
bool is_irreducible_over_Q(QPoly const &f);

// Polynomials over F_p --------------------------------------------------------

FpPoly fp_reduce(ZPoly const &f, std::int64_t p);
FpPoly fp_trim(FpPoly f);
FpPoly fp_mul(FpPoly const &a, FpPoly const &b, std::int64_t p);
std::pair<FpPoly, FpPoly> fp_divmod(FpPoly const &a, FpPoly const &b, std::int64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p);
bool fp_is_squarefree(FpPoly const &f, std::int64_t p);
/// Monic irreducible factors of a squarefree polynomial (Berlekamp).
std::vector<FpPoly> fp_factor_squarefree(FpPoly const &f, std::int64_t p);
/// Number of irreducible factors of a squarefree polynomial: the nullity of
/// the Berlekamp matrix minus the identity.
std::size_t fp_factor_count(FpPoly const &f, std::int64_t p);
/// s with s a = 1 mod (p, b) for coprime a, b.
FpPoly fp_inverse_mod(FpPoly const &a, FpPoly const &b, std::int64_t p);

// Matrices --------------------------------------------------------------------

/// Minimal polynomial (monic) of a square rational matrix.
QPoly minimal_polynomial(RatMat const &m);
/// Characteristic polynomial (monic), by the Faddeev-LeVerrier recurrence.
QPoly characteristic_polynomial(RatMat const &m);
/// f(m).
RatMat evaluate(QPoly const &f, RatMat const &m);

} // namespace jinf

#endif
