#include "jinf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jinf {

// Rational polynomials ---------------------------------------------------------

QPoly trimmed(QPoly f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
  return f;
}

int degree(QPoly const &f)
{
  return static_cast<int>(trimmed(f).size()) - 1;
}

QPoly operator+(QPoly const &a, QPoly const &b)
{
  QPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] += b[i];
  return trimmed(c);
}

QPoly operator-(QPoly const &a, QPoly const &b)
{
  return a + scaled(b, -1);
}

QPoly operator*(QPoly const &a, QPoly const &b)
{
  if (a.empty() || b.empty())
    return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return trimmed(c);
}

QPoly scaled(QPoly const &f, Rational const &c)
{
  QPoly g = f;
  for (auto &x : g)
    x *= c;
  return trimmed(g);
}

std::pair<QPoly, QPoly> divmod(QPoly const &a, QPoly const &b)
{
  QPoly bb = trimmed(b);
  if (bb.empty())
    throw std::domain_error("polynomial division by zero");
  QPoly r = trimmed(a);
  if (r.size() < bb.size())
    return {{}, r};
  QPoly q(r.size() - bb.size() + 1, Rational(0));
  while (r.size() >= bb.size() && !r.empty()) {
    std::size_t shift = r.size() - bb.size();
    Rational c = r.back() / bb.back();
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i)
      r[i + shift] -= c * bb[i];
    r = trimmed(r);
  }
  return {trimmed(q), r};
}

QPoly monic(QPoly const &f)
{
  QPoly g = trimmed(f);
  if (g.empty())
    return g;
  return scaled(g, 1 / g.back());
}

QPoly gcd(QPoly a, QPoly b)
{
  a = trimmed(a);
  b = trimmed(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Bezout extended_gcd(QPoly const &a, QPoly const &b)
{
  QPoly r0 = trimmed(a), r1 = trimmed(b);
  QPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty())
    return {{}, {}, {}};
  Rational c = 1 / r0.back();
  return {scaled(r0, c), scaled(s0, c), scaled(t0, c)};
}

QPoly derivative(QPoly const &f)
{
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * static_cast<long>(i));
  return trimmed(d);
}

Rational evaluate(QPoly const &f, Rational const &x)
{
  Rational r = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    r = r * x + f[i];
  return r;
}

QPoly shifted(QPoly const &f, Rational const &c)
{
  // Horner in the ring of polynomials: f(x + c)
  QPoly r;
  QPoly lin{c, 1};
  for (std::size_t i = f.size(); i-- > 0;)
    r = r * lin + QPoly{f[i]};
  return trimmed(r);
}

bool is_squarefree(QPoly const &f)
{
  return degree(gcd(f, derivative(f))) == 0;
}

std::string poly_to_string(QPoly const &f, std::string const &var)
{
  QPoly g = trimmed(f);
  if (g.empty())
    return "0";
  std::string s;
  for (std::size_t i = g.size(); i-- > 0;) {
    Rational c = g[i];
    if (c == 0)
      continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool show = i == 0 || a != 1;
    if (show)
      s += to_string(a);
    if (i > 0) {
      if (show)
        s += "*";
      s += var;
      if (i > 1)
        s += "^" + std::to_string(i);
    }
  }
  return s;
}

QPoly from_integers(std::vector<long> const &coeffs)
{
  QPoly f;
  for (long c : coeffs)
    f.push_back(Rational(c));
  return trimmed(f);
}

ZPoly primitive_part(QPoly const &f)
{
  QPoly g = trimmed(f);
  if (g.empty())
    return {};
  Integer l = 1;
  for (auto const &c : g)
    l = boost::multiprecision::lcm(l, denominator(c));
  ZPoly z;
  for (auto const &c : g)
    z.push_back(numerator(c * l));
  Integer cont = 0;
  for (auto const &c : z)
    cont = boost::multiprecision::gcd(cont, c);
  if (z.back() < 0)
    cont = -cont;
  for (auto &c : z)
    c /= cont;
  return z;
}

QPoly to_qpoly(ZPoly const &f)
{
  QPoly q;
  for (auto const &c : f)
    q.push_back(Rational(c));
  return trimmed(q);
}

// F_p polynomials -------------------------------------------------------------

namespace {

std::int64_t md(std::int64_t a, std::int64_t p)
{
  a %= p;
  return a < 0 ? a + p : a;
}

} // namespace

FpPoly fp_trim(FpPoly f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
  return f;
}

FpPoly fp_reduce(ZPoly const &f, std::int64_t p)
{
  FpPoly r;
  for (auto const &c : f) {
    Integer m = c % p;
    if (m < 0)
      m += p;
    r.push_back(static_cast<std::int64_t>(m));
  }
  return fp_trim(r);
}

FpPoly fp_mul(FpPoly const &a, FpPoly const &b, std::int64_t p)
{
  if (a.empty() || b.empty())
    return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return fp_trim(c);
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly const &a, FpPoly const &b, std::int64_t p)
{
  FpPoly bb = fp_trim(b);
  if (bb.empty())
    throw std::domain_error("F_p polynomial division by zero");
  FpPoly r = fp_trim(a);
  if (r.size() < bb.size())
    return {{}, r};
  FpPoly q(r.size() - bb.size() + 1, 0);
  std::int64_t inv = mod_inv(bb.back(), p);
  while (r.size() >= bb.size() && !r.empty()) {
    std::size_t shift = r.size() - bb.size();
    std::int64_t c = r.back() * inv % p;
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i)
      r[i + shift] = md(r[i + shift] - c * bb[i], p);
    r = fp_trim(r);
  }
  return {fp_trim(q), r};
}

namespace {

FpPoly fp_monic(FpPoly f, std::int64_t p)
{
  f = fp_trim(f);
  if (f.empty())
    return f;
  std::int64_t inv = mod_inv(f.back(), p);
  for (auto &c : f)
    c = c * inv % p;
  return f;
}

FpPoly fp_sub(FpPoly a, FpPoly const &b, std::int64_t p)
{
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = md(a[i] - b[i], p);
  return fp_trim(a);
}

FpPoly fp_derivative(FpPoly const &f, std::int64_t p)
{
  FpPoly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(p)) % p);
  return fp_trim(d);
}

// Rows: x^{ip} mod f for i < deg f, as coefficient vectors.
std::vector<std::vector<std::int64_t>> berlekamp_matrix(FpPoly const &f, std::int64_t p)
{
  std::size_t n = f.size() - 1;
  std::vector<std::vector<std::int64_t>> q(n, std::vector<std::int64_t>(n, 0));
  // x^p mod f by repeated multiplication
  FpPoly xp{1};
  for (std::int64_t k = 0; k < p; ++k)
    xp = fp_divmod(fp_mul(xp, {0, 1}, p), f, p).second;
  FpPoly cur{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j)
      q[i][j] = cur[j];
    cur = fp_divmod(fp_mul(cur, xp, p), f, p).second;
  }
  return q;
}

// Null space of (Q - I)^T over F_p: vectors v with v(x)^p = v(x) mod f.
std::vector<FpPoly> berlekamp_basis(FpPoly const &f, std::int64_t p)
{
  auto q = berlekamp_matrix(f, p);
  std::size_t n = q.size();
  // solve sum_i v_i (row_i - e_i) = 0: matrix M with columns = rows of Q - I
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[j][i] = md(q[i][j] - (i == j ? 1 : 0), p);
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t r = row;
    while (r < n && m[r][col] == 0)
      ++r;
    if (r == n)
      continue;
    std::swap(m[r], m[row]);
    std::int64_t inv = mod_inv(m[row][col], p);
    for (auto &x : m[row])
      x = x * inv % p;
    for (std::size_t i = 0; i < n; ++i)
      if (i != row && m[i][col] != 0) {
        std::int64_t c = m[i][col];
        for (std::size_t j = 0; j < n; ++j)
          m[i][j] = md(m[i][j] - c * m[row][j], p);
      }
    piv.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(n, false);
  for (auto c : piv)
    is_piv[c] = true;
  std::vector<FpPoly> basis;
  for (std::size_t f0 = 0; f0 < n; ++f0) {
    if (is_piv[f0])
      continue;
    FpPoly v(n, 0);
    v[f0] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k)
      v[piv[k]] = md(-m[k][f0], p);
    basis.push_back(fp_trim(v));
  }
  return basis;
}

} // namespace

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p)
{
  a = fp_trim(a);
  b = fp_trim(b);
  while (!b.empty()) {
    auto r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

bool fp_is_squarefree(FpPoly const &f, std::int64_t p)
{
  FpPoly g = fp_trim(f);
  if (g.size() <= 1)
    return !g.empty();
  return fp_gcd(g, fp_derivative(g, p), p).size() == 1;
}

std::size_t fp_factor_count(FpPoly const &f, std::int64_t p)
{
  FpPoly g = fp_monic(f, p);
  if (g.size() <= 1)
    return 0;
  return berlekamp_basis(g, p).size();
}

std::vector<FpPoly> fp_factor_squarefree(FpPoly const &f, std::int64_t p)
{
  FpPoly g = fp_monic(f, p);
  if (g.size() <= 1)
    return {};
  auto basis = berlekamp_basis(g, p);
  std::vector<FpPoly> factors{g};
  for (auto const &v : basis) {
    if (factors.size() == basis.size())
      break;
    if (v.size() <= 1)
      continue;
    std::vector<FpPoly> next;
    for (auto const &h : factors) {
      if (h.size() <= 2) {
        next.push_back(h);
        continue;
      }
      FpPoly rest = h;
      for (std::int64_t s = 0; s < p && rest.size() > 1; ++s) {
        FpPoly shifted = v;
        shifted[0] = md(shifted[0] - s, p);
        FpPoly d = fp_gcd(rest, fp_trim(shifted), p);
        if (d.size() > 1 && d.size() < rest.size()) {
          next.push_back(d);
          rest = fp_monic(fp_divmod(rest, d, p).first, p);
        }
      }
      if (rest.size() > 1)
        next.push_back(rest);
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end(), [](FpPoly const &a, FpPoly const &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return factors;
}

FpPoly fp_inverse_mod(FpPoly const &a, FpPoly const &b, std::int64_t p)
{
  FpPoly r0 = fp_trim(b), r1 = fp_divmod(a, b, p).second;
  FpPoly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1)
    throw std::domain_error("F_p polynomials are not coprime");
  std::int64_t inv = mod_inv(r0[0], p);
  for (auto &c : t0)
    c = c * inv % p;
  return fp_divmod(t0, b, p).second;
}

} // namespace jinf
