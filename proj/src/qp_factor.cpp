#include <stdexcept>

#include "jinf/localdec.hpp"

namespace jinf {

namespace {

ZPoly to_integers(QPoly const &f)
{
  ZPoly z;
  for (auto const &c : f) {
    if (denominator(c) != 1)
      throw std::logic_error("expected integer coefficients");
    z.push_back(numerator(c));
  }
  return z;
}

bool eisenstein(ZPoly const &g, Integer const &p)
{
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] % p != 0)
      return false;
  return g.back() % p != 0 && g.front() % (p * p) != 0;
}

// Segments of the lower convex hull of (i, v_p(g_i)).
std::size_t newton_segments(ZPoly const &g, Integer const &p)
{
  std::vector<std::pair<long, long>> pts;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0)
      pts.emplace_back(static_cast<long>(i), valuation(g[i], p));
  std::vector<std::pair<long, long>> hull;
  for (auto const &q : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      // drop the middle point when it lies on or above the chord
      if ((y2 - y1) * (q.first - x1) >= (q.second - y1) * (x2 - x1))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  return hull.size() - 1;
}

} // namespace

std::string to_string(QpMethod m)
{
  switch (m) {
  case QpMethod::squarefree_hensel: return "squarefree_hensel";
  case QpMethod::eisenstein_shift: return "eisenstein_shift";
  case QpMethod::newton_polygon_bound: return "newton_polygon_bound";
  }
  return "newton_polygon_bound";
}

std::pair<ZPoly, Integer> monic_integral(QPoly const &f)
{
  ZPoly prim = primitive_part(f);
  Integer kappa = prim.back();
  std::size_t n = prim.size() - 1;
  ZPoly g(prim.size(), Integer(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == n) {
      g[i] = 1;
      break;
    }
    Integer scale = 1;
    for (std::size_t k = 0; k + 1 + i < n; ++k)
      scale *= kappa;
    g[i] = prim[i] * scale;
  }
  return {g, kappa};
}

QpFactorReport qp_factor_count(QPoly const &f0, long p)
{
  QPoly f = monic(trimmed(f0));
  if (degree(f) < 1)
    throw std::invalid_argument("factor count of a constant polynomial");
  if (!is_squarefree(f))
    throw std::invalid_argument(poly_to_string(f) + " is not squarefree over Q");
  QpFactorReport rep;
  rep.polynomial = f;
  rep.p = p;
  std::size_t extra = 0;
  if (f.front() == 0) {
    // a simple root at 0 is one factor by itself
    extra = 1;
    f.erase(f.begin());
    if (degree(f) == 0) {
      rep.factor_count = 1;
      rep.method = QpMethod::squarefree_hensel;
      return rep;
    }
  }
  ZPoly g = monic_integral(f).first;
  Integer pp = p;
  FpPoly gp = fp_reduce(g, p);
  if (fp_is_squarefree(gp, p)) {
    rep.factor_count = fp_factor_count(gp, p) + extra;
    rep.method = QpMethod::squarefree_hensel;
    return rep;
  }
  for (long s = -p; s <= p; ++s) {
    ZPoly h = to_integers(shifted(to_qpoly(g), Rational(s)));
    if (eisenstein(h, pp)) {
      rep.factor_count = 1 + extra;
      rep.method = QpMethod::eisenstein_shift;
      rep.shift = s;
      return rep;
    }
  }
  rep.method = QpMethod::newton_polygon_bound;
  rep.lower_bound = newton_segments(g, pp) + extra;
  return rep;
}

} // namespace jinf
