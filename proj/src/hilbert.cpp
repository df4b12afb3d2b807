#include <algorithm>
#include <stdexcept>

#include <gmp.h>

#include "jinf/ratlin.hpp"

namespace jinf {

namespace {

// a = p^v * u with u a p-unit, a nonzero integer.
std::pair<int, Integer> split_power(Integer a, Integer const &p)
{
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return {v, a};
}

int legendre(Integer const &a, Integer const &p)
{
  return mpz_legendre(a.backend().data(), p.backend().data());
}

// (u - 1) / 2 mod 2 for odd u.
int eps2(Integer const &u)
{
  Integer r = u % 4;
  if (r < 0)
    r += 4;
  return r == 3 ? 1 : 0;
}

// (u^2 - 1) / 8 mod 2 for odd u.
int omega2(Integer const &u)
{
  Integer r = u % 8;
  if (r < 0)
    r += 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

Integer square_class_integer(Rational const &q)
{
  if (q == 0)
    throw std::invalid_argument("Hilbert symbol of zero");
  return numerator(q) * denominator(q);
}

} // namespace

std::vector<Integer> prime_divisors(Integer n)
{
  if (n < 0)
    n = -n;
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n && d < 1000000; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1) {
    if (mpz_probab_prime_p(n.backend().data(), 30) == 0)
      throw std::invalid_argument("cofactor " + n.str() + " is too large to factor");
    out.push_back(n);
  }
  return out;
}

Integer squarefree_class(Rational const &q)
{
  Integer n = square_class_integer(q);
  Integer out = n < 0 ? -1 : 1;
  for (auto const &p : prime_divisors(n))
    if (split_power(n, p).first % 2 == 1)
      out *= p;
  return out;
}

int hilbert_symbol(Rational const &qa, Rational const &qb, Integer const &place)
{
  Integer a = square_class_integer(qa), b = square_class_integer(qb);
  if (place == kRealPlace)
    return (a < 0 && b < 0) ? -1 : 1;
  Integer const &p = place;
  if (p < 2)
    throw std::invalid_argument("Hilbert symbol place must be a prime or the real place");
  auto [alpha, u] = split_power(a, p);
  auto [beta, v] = split_power(b, p);
  if (p == 2) {
    int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  Integer half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && half % 2 == 1)
    sign = -sign;
  if (beta % 2 == 1)
    sign *= legendre(u, p);
  if (alpha % 2 == 1)
    sign *= legendre(v, p);
  return sign;
}

bool quaternion_is_division(Rational const &a, Rational const &b, Integer const &place)
{
  return hilbert_symbol(a, b, place) == -1;
}

std::vector<Integer> ramified_places(Rational const &a, Rational const &b)
{
  std::vector<Integer> places{Integer(kRealPlace), Integer(2)};
  for (auto const &q : {square_class_integer(a), square_class_integer(b)})
    for (auto const &p : prime_divisors(q))
      if (std::find(places.begin(), places.end(), p) == places.end())
        places.push_back(p);
  std::vector<Integer> out;
  for (auto const &v : places)
    if (hilbert_symbol(a, b, v) == -1)
      out.push_back(v);
  return out;
}

bool quaternion_is_division_over_Q(Rational const &a, Rational const &b) { return !ramified_places(a, b).empty(); }

} // namespace jinf
