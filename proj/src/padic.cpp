#include "jinf/padic.hpp"

#include <algorithm>

namespace jinf {

namespace {

Integer ppow(long p, long k)
{
  if (k <= 0)
    return 1;
  return boost::multiprecision::pow(Integer(p), static_cast<unsigned>(k));
}

Integer mod_pos(Integer a, Integer const &m)
{
  a %= m;
  if (a < 0)
    a += m;
  return a;
}

Integer inv_mod(Integer const &a, Integer const &m)
{
  Integer r;
  Integer aa = mod_pos(a, m);
  if (mpz_invert(r.backend().data(), aa.backend().data(), m.backend().data()) == 0)
    throw std::domain_error("p-adic inverse of a non-unit");
  return r;
}

long strip(Integer &m, long p)
{
  long k = 0;
  Integer pp = p;
  while (m != 0 && m % pp == 0) {
    m /= pp;
    ++k;
  }
  return k;
}

} // namespace

Padic Padic::make(long prime, long val, long precision, Integer m)
{
  Padic x;
  x.p_ = prime;
  x.n_ = precision;
  if (m == 0 || val >= precision) {
    x.v_ = precision;
    x.u_ = 0;
    return x;
  }
  val += strip(m, prime);
  if (val >= precision) {
    x.v_ = precision;
    x.u_ = 0;
    return x;
  }
  x.v_ = val;
  x.u_ = mod_pos(m, ppow(prime, precision - val));
  return x;
}

Padic Padic::zero(long prime, long precision)
{
  return make(prime, precision, precision, 0);
}

Padic::Padic(Rational const &q, long prime, long precision)
{
  if (prime < 2)
    throw std::invalid_argument("p-adic prime must be at least 2");
  if (q == 0) {
    *this = zero(prime, precision);
    return;
  }
  Integer num = numerator(q), den = denominator(q);
  long a = strip(num, prime);
  long b = strip(den, prime);
  long v = a - b;
  if (v >= precision) {
    *this = zero(prime, precision);
    return;
  }
  Integer mod = ppow(prime, precision - v);
  *this = make(prime, v, precision, mod_pos(num * inv_mod(den, mod), mod));
}

Padic Padic::from_residue(Integer const &r, long prime, long precision)
{
  if (precision < 0)
    throw std::invalid_argument("residue precision must be nonnegative");
  return make(prime, 0, precision, mod_pos(r, ppow(prime, precision)));
}

Rational Padic::to_rational() const
{
  if (is_zero())
    return 0;
  if (v_ >= 0)
    return Rational(u_ * ppow(p_, v_));
  return Rational(u_, ppow(p_, -v_));
}

Integer Padic::residue() const
{
  return residue(n_);
}

Integer Padic::residue(long k) const
{
  if (k > n_)
    throw PrecisionExhausted("residue requested beyond known precision");
  if (is_zero() || v_ >= k)
    return 0;
  if (v_ < 0)
    throw std::domain_error("residue of a non-integral p-adic number");
  return mod_pos(u_ * ppow(p_, v_), ppow(p_, k));
}

Padic Padic::truncated(long n) const
{
  if (n >= n_)
    return *this;
  return make(p_, v_, n, u_);
}

Padic &Padic::operator+=(Padic const &o)
{
  if (p_ != o.p_)
    throw std::invalid_argument("p-adic sum with different primes");
  long n = std::min(n_, o.n_);
  if (o.is_zero()) {
    *this = truncated(n);
    return *this;
  }
  if (is_zero()) {
    *this = o.truncated(n);
    return *this;
  }
  long v = std::min(v_, o.v_);
  Integer m = u_ * ppow(p_, v_ - v) + o.u_ * ppow(p_, o.v_ - v);
  *this = make(p_, v, n, m);
  return *this;
}

Padic Padic::operator-() const
{
  Padic x = *this;
  if (!x.is_zero())
    x.u_ = mod_pos(-x.u_, ppow(p_, n_ - v_));
  return x;
}

Padic &Padic::operator-=(Padic const &o)
{
  return *this += -o;
}

Padic &Padic::operator*=(Padic const &o)
{
  if (p_ != o.p_)
    throw std::invalid_argument("p-adic product with different primes");
  long n = std::min(n_ + o.v_, o.n_ + v_);
  if (n > kExact)
    n = kExact;
  if (is_zero() || o.is_zero()) {
    *this = zero(p_, n);
    return *this;
  }
  *this = make(p_, v_ + o.v_, n, u_ * o.u_);
  return *this;
}

Padic &Padic::operator/=(Padic const &o)
{
  if (p_ != o.p_)
    throw std::invalid_argument("p-adic quotient with different primes");
  if (o.is_zero())
    throw PrecisionExhausted("p-adic division by a value indistinguishable from zero");
  if (is_zero()) {
    *this = zero(p_, n_ >= kExact ? kExact : n_ - o.v_);
    return *this;
  }
  long rel = std::min(n_ - v_, o.n_ - o.v_);
  long v = v_ - o.v_;
  Integer mod = ppow(p_, rel);
  *this = make(p_, v, v + rel, mod_pos(u_ * inv_mod(o.u_, mod), mod));
  return *this;
}

bool is_qr_mod(Integer const &a, long p)
{
  Integer r = mod_pos(a, p);
  if (r == 0)
    return false;
  for (long x = 1; x < p; ++x)
    if (Integer(x * x % p) == r)
      return true;
  return false;
}

bool Padic::is_square() const
{
  if (is_zero())
    throw PrecisionExhausted("square test of a value indistinguishable from zero");
  if (v_ % 2 != 0)
    return false;
  if (p_ != 2)
    return is_qr_mod(u_, p_);
  if (relative_precision() < 3)
    throw PrecisionExhausted("square test at p = 2 needs three known digits");
  return mod_pos(u_, 8) == 1;
}

Padic Padic::sqrt() const
{
  if (!is_square())
    throw std::domain_error("p-adic square root of a non-square");
  long k = relative_precision();
  Integer r;
  long known;
  if (p_ != 2) {
    for (long x = 1; x < p_; ++x)
      if (mod_pos(Integer(x) * x - u_, p_) == 0) {
        r = x;
        break;
      }
    Integer mod = p_;
    for (long have = 1; have < k;) {
      have = std::min(2 * have, k);
      mod = ppow(p_, have);
      r = mod_pos(r - (r * r - u_) * inv_mod(2 * r, mod), mod);
    }
    known = k;
  } else {
    r = 1;
    for (long i = 3; i < k; ++i)
      if (mod_pos(r * r - u_, ppow(2, i + 1)) != 0)
        r += ppow(2, i - 1);
    known = k - 1;
  }
  return make(p_, v_ / 2, v_ / 2 + known, r);
}

std::string Padic::to_string() const
{
  if (is_zero())
    return "O(" + std::to_string(p_) + "^" + std::to_string(n_) + ")";
  std::string s = jinf::to_string(u_);
  if (v_ != 0)
    s += "*" + std::to_string(p_) + "^" + std::to_string(v_);
  return s + " + O(" + std::to_string(p_) + "^" + std::to_string(n_) + ")";
}

PadicMat to_padic(RatMat const &m, long prime, long precision)
{
  PadicMat out(m.rows(), m.cols(), Padic::zero(prime));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Padic(m(i, j), prime, precision);
  return out;
}

long min_precision(PadicMat const &m)
{
  long n = Padic::kExact;
  for (auto const &x : m.data())
    n = std::min(n, x.precision());
  return n;
}

long min_valuation(PadicMat const &m)
{
  long v = Padic::kExact;
  for (auto const &x : m.data())
    if (!x.is_zero())
      v = std::min(v, x.valuation());
  return v;
}

PadicMat truncated(PadicMat const &m, long precision)
{
  PadicMat out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).truncated(precision);
  return out;
}

} // namespace jinf
