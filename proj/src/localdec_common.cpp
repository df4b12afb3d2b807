#include <cstdlib>
#include <stdexcept>

#include "localdec_internal.hpp"

namespace jinf::detail {

namespace {

Integer mod_pos(Integer a, Integer const &m)
{
  a %= m;
  if (a < 0)
    a += m;
  return a;
}

// a * b mod (g, m) for monic g.
ZPoly mulmod(ZPoly const &a, ZPoly const &b, ZPoly const &g, Integer const &m)
{
  std::size_t n = g.size() - 1;
  ZPoly c(a.size() + b.size(), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  for (std::size_t k = c.size(); k-- > n;) {
    Integer lead = c[k];
    if (lead == 0)
      continue;
    for (std::size_t i = 0; i <= n; ++i)
      c[k - n + i] -= lead * g[i];
  }
  c.resize(n);
  for (auto &x : c)
    x = mod_pos(x, m);
  return c;
}

long working_precision(PadicMat const &x)
{
  long n = min_precision(x);
  return n >= Padic::kExact ? kDefaultPrecision : n;
}

} // namespace

std::optional<LiftedIdempotent> lift_idempotent(QPoly const &f, long p, long digits)
{
  auto [g, kappa] = monic_integral(f);
  FpPoly gp = fp_reduce(g, p);
  if (!fp_is_squarefree(gp, p))
    return std::nullopt;
  auto fs = fp_factor_squarefree(gp, p);
  if (fs.size() < 2)
    return std::nullopt;
  FpPoly h{1};
  for (std::size_t k = 1; k < fs.size(); ++k)
    h = fp_mul(h, fs[k], p);
  FpPoly t = fp_inverse_mod(h, fs.front(), p);
  FpPoly e0 = fp_divmod(fp_mul(t, h, p), gp, p).second;
  ZPoly e;
  for (auto c : e0)
    e.push_back(Integer(c));
  e.resize(g.size() - 1, Integer(0));
  Integer m = 1;
  for (long k = 0; k < digits; ++k)
    m *= p;
  for (int iter = 0; iter < 64; ++iter) {
    ZPoly e2 = mulmod(e, e, g, m);
    bool done = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e2[i] != e[i])
        done = false;
    if (done)
      return LiftedIdempotent{e, kappa};
    ZPoly e3 = mulmod(e2, e, g, m);
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = mod_pos(3 * e2[i] - 2 * e3[i], m);
  }
  throw std::logic_error("idempotent lifting did not converge");
}

PadicMat evaluate_poly(ZPoly const &poly, PadicMat const &x)
{
  long p = x(0, 0).prime();
  long n = working_precision(x);
  PadicMat r(x.rows(), x.cols(), Padic::zero(p));
  for (std::size_t i = poly.size(); i-- > 0;) {
    r = r * x;
    for (std::size_t k = 0; k < x.rows(); ++k)
      r(k, k) += Padic(Rational(poly[i]), p, n);
  }
  return r;
}

std::vector<PadicVec> padic_column_space(PadicMat const &m)
{
  std::vector<PadicVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    cols.push_back(m.col(j));
  return span_basis(cols, m.rows(), m(0, 0));
}

bool finish_reducible(QpVerdict &v, PadicRep const &rep, PadicMat const &e)
{
  if (!(e * e - e).is_zero())
    return false;
  auto w = padic_column_space(e);
  if (w.empty() || w.size() >= rep.dimension || !is_invariant(rep, w))
    return false;
  v.status = Decision::reducible;
  v.witness = std::move(w);
  v.idempotent = e;
  return true;
}

std::optional<PadicMat> quaternion_split(PadicMat const &i, PadicMat const &j, Padic const &a, Padic const &b)
{
  long p = a.prime();
  long n = working_precision(i);
  std::size_t d = i.rows();
  PadicMat one = PadicMat::identity(d, Padic(Rational(1), p, n));
  Padic half(Rational(1, 2), p, n);
  for (long r = 1; r <= 20; ++r)
    for (long x = -r; x <= r; ++x)
      for (long y = -r; y <= r; ++y) {
        if (std::labs(x) != r && std::labs(y) != r)
          continue;
        Padic px(Rational(x), p, n), py(Rational(y), p, n);
        Padic s = a * px * px + b * py * py;
        if (s.is_zero() || !s.is_square())
          continue;
        Padic delta = s.sqrt();
        PadicMat w = i.scaled(px) + j.scaled(py);
        return (one + w.scaled(Padic(Rational(1), p, n) / delta)).scaled(half);
      }
  return std::nullopt;
}

std::vector<Padic> padic_minimal_polynomial(PadicMat const &m)
{
  std::size_t n = m.rows();
  long p = m(0, 0).prime();
  long prec = working_precision(m);
  std::vector<PadicVec> powers;
  PadicMat cur = PadicMat::identity(n, Padic(Rational(1), p, prec));
  for (std::size_t k = 0; k <= n; ++k) {
    PadicVec flat = cur.data();
    if (auto c = coordinates(powers, flat)) {
      std::vector<Padic> f;
      for (auto const &x : *c)
        f.push_back(-x);
      f.push_back(Padic(Rational(1), p, prec));
      return f;
    }
    powers.push_back(flat);
    cur = cur * m;
  }
  throw std::logic_error("p-adic minimal polynomial exceeded the dimension");
}

} // namespace jinf::detail
