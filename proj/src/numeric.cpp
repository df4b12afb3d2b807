#include "jinf/numeric.hpp"

#include <vector>

namespace jinf {

std::string to_string(Integer const &z) { return z.str(); }

std::string to_string(Rational const &q)
{
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string const &text)
{
  auto parse_int = [&](std::string const &s) -> Integer {
    if (s.empty())
      throw std::invalid_argument("empty number in '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      throw std::invalid_argument("malformed number '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed number '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };

  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

int valuation(Integer z, Integer const &p)
{
  if (z == 0)
    throw std::domain_error("valuation of zero");
  int v = 0;
  while (z % p == 0) {
    z /= p;
    ++v;
  }
  return v;
}

int valuation(Rational const &q, Integer const &p)
{
  return valuation(numerator(q), p) - valuation(denominator(q), p);
}

bool is_prime(std::int64_t n)
{
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod)
{
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0)
    base += mod;
  while (exp > 0) {
    if (exp & 1)
      result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t mod)
{
  std::int64_t g = mod, x = 0, x1 = 1, a1 = ((a % mod) + mod) % mod;
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1)
    throw std::domain_error("element not invertible");
  return ((x % mod) + mod) % mod;
}

std::int64_t primitive_root(std::int64_t prime)
{
  std::vector<std::int64_t> factors;
  std::int64_t m = prime - 1;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1)
    factors.push_back(m);

  for (std::int64_t g = 2; g < prime; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (mod_pow(g, (prime - 1) / f, prime) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  return 1;
}

} // namespace jinf
