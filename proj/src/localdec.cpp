#include <stdexcept>

#include "localdec_internal.hpp"

namespace jinf {

using namespace detail;

namespace {

// Lift of the field idempotent for an element x of the commutant whose
// minimal polynomial f is reducible over Q_p.
std::optional<PadicMat> field_idempotent(RatMat const &x, long p, long n)
{
  QPoly f = minimal_polynomial(x);
  auto probe = lift_idempotent(f, p, 1);
  if (!probe)
    return std::nullopt;
  // digits lost to denominators of the powers of kappa x
  RatMat y = x.scaled(Rational(probe->kappa));
  long vmin = 0;
  RatMat pw = RatMat::identity(x.rows(), Rational(1));
  for (int k = 0; k < degree(f); ++k) {
    for (auto const &c : pw.data())
      if (c != 0)
        vmin = std::min<long>(vmin, valuation(c, Integer(p)));
    pw = pw * y;
  }
  auto lifted = lift_idempotent(f, p, n - vmin);
  return to_padic(evaluate(to_qpoly(lifted->e), y), p, n);
}

// Pure quaternions x = al i + be j + ga ij over the quadratic center with
// x^2 rational and a square in Q_p; arithmetic in K = Q(r), r^2 = disc.
std::optional<PadicMat> cyclic_split(AlgebraStructure const &st, RatMat const &r, long p, long n)
{
  using K = std::pair<Rational, Rational>;
  auto mul = [&](K const &u, K const &v) {
    return K{u.first * v.first + u.second * v.second * st.discriminant, u.first * v.second + u.second * v.first};
  };
  K a{st.a, st.a1}, b{st.b, st.b1};
  K ab = mul(a, b);
  std::size_t d = r.rows();
  RatMat one = RatMat::identity(d, Rational(1));
  RatMat ij = st.i * st.j;
  auto as_mat = [&](K const &u) { return one.scaled(u.first) + r.scaled(u.second); };
  std::vector<K> small;
  for (long u = -2; u <= 2; ++u)
    for (long v = -2; v <= 2; ++v)
      small.emplace_back(Rational(u), Rational(v));
  for (auto const &al : small)
    for (auto const &be : small)
      for (auto const &ga : small) {
        K sq = mul(mul(al, al), a);
        K t = mul(mul(be, be), b);
        K s = mul(mul(ga, ga), ab);
        K x2{sq.first + t.first - s.first, sq.second + t.second - s.second};
        if (x2.second != 0 || x2.first == 0)
          continue;
        Padic delta2(x2.first, p, n);
        if (!delta2.is_square())
          continue;
        RatMat x = as_mat(al) * st.i + as_mat(be) * st.j + as_mat(ga) * ij;
        Padic delta = delta2.sqrt();
        PadicMat px = to_padic(x, p, n);
        PadicMat pone = to_padic(one, p, n);
        Padic half(Rational(1, 2), p, n);
        return (pone + px.scaled(Padic(Rational(1), p, n) / delta)).scaled(half);
      }
  return std::nullopt;
}

QpVerdict decide_rational(MatRep const &rep, long p, long n)
{
  QpVerdict v;
  v.precision = n;
  PadicRep prep = to_padic(rep, p, n);
  auto q = irreducible_over_Q(rep);
  auto const &st = q.structure;
  auto reducible_with = [&](std::optional<PadicMat> const &e, std::string const &why) {
    if (e && finish_reducible(v, prep, *e)) {
      v.evidence = why;
      return v;
    }
    v.status = Decision::unknown;
    v.evidence = why + ", but no verified idempotent at precision " + std::to_string(n);
    return v;
  };
  switch (st.kind) {
  case AlgebraKind::split:
    return reducible_with(to_padic(st.element, p, n), "reducible over Q: " + q.evidence);
  case AlgebraKind::unknown:
    v.evidence = "structure over Q undecided: " + q.evidence;
    return v;
  case AlgebraKind::scalars:
    v.status = Decision::irreducible;
    v.evidence = "commutant is Q, stays Q_p";
    return v;
  case AlgebraKind::field: {
    auto r = qp_factor_count(st.minpoly, p);
    std::string how = poly_to_string(st.minpoly) + " over Q_" + std::to_string(p) + " by " + to_string(r.method);
    if (r.factor_count == 1u) {
      v.status = Decision::irreducible;
      v.evidence = "commutant field stays a field: " + how;
      return v;
    }
    if (!r.factor_count && r.lower_bound < 2) {
      v.evidence = "factor count of " + how + " unknown";
      return v;
    }
    return reducible_with(field_idempotent(st.element, p, n), "commutant field splits: " + how);
  }
  case AlgebraKind::quaternion_over_Q: {
    int h = hilbert_symbol(st.a, st.b, Integer(p));
    std::string sym = "(" + to_string(st.a) + "," + to_string(st.b) + ")_" + std::to_string(p) + " = " +
                      std::to_string(h);
    if (h == -1) {
      v.status = Decision::irreducible;
      v.evidence = "quaternion commutant stays division: " + sym;
      return v;
    }
    return reducible_with(quaternion_split(to_padic(st.i, p, n), to_padic(st.j, p, n), Padic(st.a, p, n),
                                           Padic(st.b, p, n)),
                          "quaternion commutant splits: " + sym);
  }
  case AlgebraKind::cyclic_algebra: {
    RatMat const &c = st.element;
    QPoly cm = st.minpoly;
    auto r = qp_factor_count(cm, p);
    if (r.factor_count == 2u)
      return reducible_with(field_idempotent(c, p, n), "center " + poly_to_string(cm) + " splits over Q_p");
    if (r.factor_count != 1u) {
      v.evidence = "splitting of the center over Q_p undecided";
      return v;
    }
    RatMat rr = c.scaled(2) + RatMat::identity(c.rows(), Rational(1)).scaled(cm[1]);
    return reducible_with(cyclic_split(st, rr, p, n),
                          "quaternion algebra over the center field splits over Q_" + std::to_string(p) +
                              ": pure quaternion with square norm in Q_p");
  }
  }
  return v;
}

template <class F>
QpVerdict ladder(F const &decide, long precision)
{
  long n = precision;
  for (int k = 0; k <= kPrecisionDoublings; ++k, n *= 2) {
    try {
      return decide(n);
    } catch (PrecisionExhausted const &) {
    }
  }
  QpVerdict v;
  v.precision = n / 2;
  v.precision_exhausted = true;
  v.evidence = "precision exhausted after " + std::to_string(kPrecisionDoublings) + " doublings";
  return v;
}

} // namespace

PadicRep to_padic(MatRep const &rep, long p, long precision)
{
  std::vector<PadicMat> mats;
  for (auto const &m : rep.images)
    mats.push_back(to_padic(m, p, precision));
  auto out = rep_from_data(rep.group.degree(), rep.generators, mats, rep.elements.size());
  out.ring = "Z" + std::to_string(p);
  return out;
}

QpVerdict irreducible_over_Qp(MatRep const &rep, long p, long precision)
{
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  auto v = ladder([&](long n) { return decide_rational(rep, p, n); }, precision);
  if (v.status == Decision::reducible) {
    auto again = ladder([&](long n) { return decide_rational(rep, p, n); }, 2 * v.precision);
    if (again.status != Decision::reducible || again.witness.size() != v.witness.size())
      throw std::logic_error("reducible verdict not reproduced at doubled precision");
    v.evidence += "; re-verified at precision " + std::to_string(again.precision);
  }
  return v;
}

} // namespace jinf
