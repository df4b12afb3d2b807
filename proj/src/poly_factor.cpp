#include <algorithm>
#include <stdexcept>

#include "jinf/poly.hpp"

namespace jinf {

namespace {

Integer mods(Integer a, Integer const &m)
{
  a %= m;
  if (a < 0)
    a += m;
  return a;
}

// Symmetric residue in (-m/2, m/2].
Integer symmetric(Integer a, Integer const &m)
{
  a = mods(a, m);
  if (2 * a > m)
    a -= m;
  return a;
}

ZPoly ztrim(ZPoly f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
  return f;
}

ZPoly zmul(ZPoly const &a, ZPoly const &b)
{
  if (a.empty() || b.empty())
    return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return ztrim(c);
}

ZPoly zmod(ZPoly f, Integer const &m)
{
  for (auto &c : f)
    c = mods(c, m);
  return ztrim(f);
}

ZPoly from_fp(FpPoly const &f)
{
  ZPoly z;
  for (auto c : f)
    z.push_back(Integer(c));
  return z;
}

// Lift f = g h mod p (g monic, coprime to h mod p) to modulus p^k.
std::pair<ZPoly, ZPoly> hensel_lift(ZPoly const &f, ZPoly g, ZPoly h, std::int64_t p, int k)
{
  FpPoly gp = fp_reduce(g, p), hp = fp_reduce(h, p);
  FpPoly s = fp_inverse_mod(gp, hp, p); // s g = 1 mod h
  FpPoly t = fp_inverse_mod(hp, gp, p); // t h = 1 mod g
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    Integer next = pj * p;
    ZPoly diff = ztrim(f);
    ZPoly gh = zmul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i)
      diff[i] -= gh[i];
    diff = zmod(diff, next);
    for (auto &c : diff) {
      if (c % pj != 0)
        throw std::logic_error("Hensel lifting lost the congruence");
      c /= pj;
    }
    FpPoly e = fp_reduce(diff, p);
    // dg = e t mod g, dh = e s mod h  (then dg h + dh g = e mod p)
    FpPoly dg = fp_divmod(fp_mul(e, t, p), gp, p).second;
    FpPoly dh = fp_divmod(fp_mul(e, s, p), hp, p).second;
    ZPoly zg = from_fp(dg), zh = from_fp(dh);
    g.resize(std::max(g.size(), zg.size()), Integer(0));
    h.resize(std::max(h.size(), zh.size()), Integer(0));
    for (std::size_t i = 0; i < zg.size(); ++i)
      g[i] += pj * zg[i];
    for (std::size_t i = 0; i < zh.size(); ++i)
      h[i] += pj * zh[i];
    g = zmod(g, next);
    h = zmod(h, next);
    pj = next;
  }
  return {g, h};
}

// Irreducible factors of a squarefree primitive integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f)
{
  std::size_t n = f.size() - 1;
  if (n <= 1)
    return {f};
  Integer lc = f.back();
  std::int64_t p = 3;
  for (;; p += 2) {
    if (!is_prime(p) || lc % p == 0)
      continue;
    if (fp_is_squarefree(fp_reduce(f, p), p))
      break;
  }
  auto modp = fp_factor_squarefree(fp_reduce(f, p), p);
  if (modp.size() == 1)
    return {f};

  // coefficient bound for factors (Mignotte), doubled for signs
  Integer norm2 = 0;
  for (auto const &c : f)
    norm2 += c * c;
  Integer bound = boost::multiprecision::sqrt(norm2) + 1;
  bound <<= static_cast<unsigned>(n + 1);
  bound *= boost::multiprecision::abs(lc);
  int k = 1;
  Integer pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  // lift all factors: peel one monic factor at a time
  std::vector<ZPoly> lifted;
  ZPoly rest = zmod(f, pk);
  for (std::size_t i = 0; i + 1 < modp.size(); ++i) {
    FpPoly others{1};
    for (std::size_t j = i + 1; j < modp.size(); ++j)
      others = fp_mul(others, modp[j], p);
    ZPoly h = from_fp(others);
    for (auto &c : h)
      c = mods(c * lc, Integer(p));
    h.back() = rest.back(); // keep the true leading coefficient
    auto [g, hh] = hensel_lift(rest, from_fp(modp[i]), h, p, k);
    lifted.push_back(g);
    rest = hh;
  }
  // last factor: rest / lc made monic mod p^k
  {
    Integer inv;
    Integer l = mods(lc, pk);
    mpz_invert(inv.backend().data(), l.backend().data(), pk.backend().data());
    ZPoly last = rest;
    for (auto &c : last)
      c = mods(c * inv, pk);
    lifted.push_back(ztrim(last));
  }

  std::vector<ZPoly> found;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i)
    live[i] = i;
  ZPoly g = f;
  for (std::size_t size = 1; 2 * size <= live.size();) {
    bool progressed = false;
    std::vector<bool> pick(live.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      Integer glc = g.back();
      ZPoly cand{glc};
      for (std::size_t i = 0; i < live.size(); ++i)
        if (pick[i])
          cand = zmod(zmul(cand, lifted[live[i]]), pk);
      for (auto &c : cand)
        c = symmetric(c, pk);
      ZPoly prim = primitive_part(to_qpoly(cand));
      auto [q, r] = divmod(to_qpoly(g), to_qpoly(prim));
      if (!r.empty())
        continue;
      found.push_back(prim);
      g = primitive_part(q);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < live.size(); ++i)
        if (!pick[i])
          keep.push_back(live[i]);
      live = std::move(keep);
      progressed = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!progressed)
      ++size;
  }
  found.push_back(g);
  return found;
}

bool qpoly_less(QPoly const &a, QPoly const &b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i];
  return false;
}

} // namespace

std::vector<std::pair<QPoly, int>> factor_over_Q(QPoly const &f)
{
  QPoly g = monic(f);
  if (g.size() <= 1)
    return {};
  std::vector<std::pair<QPoly, int>> out;
  // Yun's squarefree decomposition
  QPoly d = derivative(g);
  QPoly a = gcd(g, d);
  QPoly b = divmod(g, a).first;
  QPoly c = divmod(d, a).first;
  QPoly dd = c - derivative(b);
  for (int i = 1; degree(b) > 0; ++i) {
    QPoly h = gcd(b, dd);
    if (degree(h) > 0)
      for (auto const &z : zassenhaus(primitive_part(h)))
        out.emplace_back(monic(to_qpoly(z)), i);
    b = divmod(b, h).first;
    c = divmod(dd, h).first;
    dd = c - derivative(b);
  }
  std::sort(out.begin(), out.end(), [](auto const &x, auto const &y) { return qpoly_less(x.first, y.first); });
  return out;
}

bool is_irreducible_over_Q(QPoly const &f)
{
  auto fs = factor_over_Q(f);
  return fs.size() == 1 && fs.front().second == 1;
}

RatMat evaluate(QPoly const &f, RatMat const &m)
{
  std::size_t n = m.rows();
  RatMat r(n, n, Rational(0));
  for (std::size_t i = f.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t k = 0; k < n; ++k)
      r(k, k) += f[i];
  }
  return r;
}

QPoly minimal_polynomial(RatMat const &m)
{
  if (!m.square())
    throw std::invalid_argument("minimal polynomial of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<RatVec> powers;
  RatMat cur = RatMat::identity(n, Rational(1));
  for (std::size_t k = 0; k <= n; ++k) {
    RatVec flat = cur.data();
    if (auto c = coordinates(powers, flat)) {
      QPoly f(c->begin(), c->end());
      for (auto &x : f)
        x = -x;
      f.push_back(1);
      return trimmed(f);
    }
    powers.push_back(flat);
    cur = cur * m;
  }
  throw std::logic_error("minimal polynomial exceeded the dimension");
}

QPoly characteristic_polynomial(RatMat const &a)
{
  if (!a.square())
    throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  std::size_t n = a.rows();
  QPoly c(n + 1, Rational(0));
  c[n] = 1;
  RatMat mk(n, n, Rational(0));
  RatMat id = RatMat::identity(n, Rational(1));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + id.scaled(c[n - k + 1]);
    RatMat am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return trimmed(c);
}

} // namespace jinf
