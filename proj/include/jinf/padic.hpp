#ifndef JINF_PADIC_HPP
#define JINF_PADIC_HPP

#include <stdexcept>
#include <string>

#include "jinf/matrix.hpp"
#include "jinf/numeric.hpp"

namespace jinf {

/// Thrown when a p-adic computation runs out of known digits before it can
/// make a decision. Callers retry at higher precision.
class PrecisionExhausted : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Default p-adic precision in digits, and the retry ladder above it.
inline constexpr long kDefaultPrecision = 64;
inline constexpr int kPrecisionDoublings = 2;

/// Element of Q_p known modulo p^N (capped absolute precision): the value
/// is unit * p^val with unit known modulo p^(N - val). Precision is tracked
/// pessimistically through every operation.
class Padic
{
public:
  /// Marker precision for an exact zero.
  static constexpr long kExact = 1L << 40;

  Padic() = default;
  Padic(Rational const &q, long prime, long precision);
  static Padic zero(long prime, long precision = kExact);
  /// The residue r (0 <= r < p^N, so N >= 0) read as an element known mod p^N.
  static Padic from_residue(Integer const &r, long prime, long precision);

  long prime() const { return p_; }
  /// Absolute precision N.
  long precision() const { return n_; }
  /// Valuation; for a value indistinguishable from zero, the precision.
  long valuation() const { return v_; }
  /// Known digits beyond the valuation.
  long relative_precision() const { return n_ - v_; }
  bool is_zero() const { return v_ >= n_; }
  Integer const &unit() const { return u_; }

  /// A rational with the same expansion to the known precision.
  Rational to_rational() const;
  /// Residue modulo p^N; requires valuation >= 0.
  Integer residue() const;
  /// Residue modulo p^k for k <= precision; requires valuation >= 0.
  Integer residue(long k) const;
  /// Same value with precision lowered to at most n.
  Padic truncated(long n) const;

  Padic &operator+=(Padic const &o);
  Padic &operator-=(Padic const &o);
  Padic &operator*=(Padic const &o);
  Padic &operator/=(Padic const &o);
  Padic operator-() const;

  friend Padic operator+(Padic a, Padic const &b) { return a += b; }
  friend Padic operator-(Padic a, Padic const &b) { return a -= b; }
  friend Padic operator*(Padic a, Padic const &b) { return a *= b; }
  friend Padic operator/(Padic a, Padic const &b) { return a /= b; }
  /// Exact structural equality (same digits and precision).
  friend bool operator==(Padic const &a, Padic const &b)
  {
    return a.p_ == b.p_ && a.v_ == b.v_ && a.n_ == b.n_ && a.u_ == b.u_;
  }

  /// Whether the value is a nonzero square in Q_p. Throws PrecisionExhausted
  /// if too few digits are known to decide.
  bool is_square() const;
  /// A square root; requires is_square().
  Padic sqrt() const;

  std::string to_string() const;

private:
  static Padic make(long prime, long val, long precision, Integer m);

  long p_ = 2;
  long v_ = kExact;
  long n_ = kExact;
  Integer u_ = 0;
};

template <>
struct ScalarTraits<Padic>
{
  static bool is_zero(Padic const &x) { return x.is_zero(); }
  static Padic zero_like(Padic const &x) { return Padic::zero(x.prime()); }
  static Padic one_like(Padic const &x)
  {
    long n = x.precision() >= Padic::kExact ? kDefaultPrecision : x.precision();
    return Padic(Rational(1), x.prime(), n < 1 ? 1 : n);
  }
  static bool better_pivot(Padic const &a, Padic const &b) { return a.valuation() < b.valuation(); }
};

using PadicMat = Matrix<Padic>;

PadicMat to_padic(RatMat const &m, long prime, long precision);
/// Smallest absolute precision over the entries.
long min_precision(PadicMat const &m);
/// Smallest valuation over the entries (kExact for the zero matrix).
long min_valuation(PadicMat const &m);
PadicMat truncated(PadicMat const &m, long precision);

/// Legendre/Jacobi-free quadratic residue test for a unit modulo an odd prime.
bool is_qr_mod(Integer const &a, long p);

} // namespace jinf

#endif
