#include <random>
#include <stdexcept>

#include "jinf/ratlin.hpp"

namespace jinf {

namespace {

std::vector<RatVec> flats(std::vector<RatMat> const &ms)
{
  std::vector<RatVec> out;
  for (auto const &m : ms)
    out.push_back(m.data());
  return out;
}

Rational trace(RatMat const &m)
{
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    t += m(i, i);
  return t;
}

RatMat combination(std::vector<RatMat> const &ms, std::vector<Rational> const &c)
{
  RatMat out(ms.front().rows(), ms.front().cols(), Rational(0));
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (c[k] != 0)
      out = out + ms[k].scaled(c[k]);
  return out;
}

QPoly power(QPoly const &f, int m)
{
  QPoly out{1};
  for (int k = 0; k < m; ++k)
    out = out * f;
  return out;
}

void check_closed(std::vector<RatMat> const &basis)
{
  std::size_t d = basis.front().rows();
  auto fl = flats(basis);
  if (!coordinates(fl, RatMat::identity(d, Rational(1)).data()))
    throw std::invalid_argument("algebra basis does not contain the identity");
  if (basis.size() > 32)
    return;
  for (auto const &x : basis)
    for (auto const &y : basis)
      if (!coordinates(fl, (x * y).data()))
        throw std::invalid_argument("algebra basis is not closed under multiplication");
}

// Exact sign of u + v * sqrt(disc), disc > 0 not a square, value nonzero.
int real_sign(Rational const &u, Rational const &v, Rational const &disc)
{
  if (v == 0)
    return u > 0 ? 1 : -1;
  if (u >= 0 && v > 0)
    return 1;
  if (u <= 0 && v < 0)
    return -1;
  Rational uu = u * u, vv = v * v * disc;
  if (u > 0)
    return uu > vv ? 1 : -1;
  return vv > uu ? 1 : -1;
}

Rational rational_sqrt(Rational const &q)
{
  Integer n = boost::multiprecision::sqrt(numerator(q));
  Integer d = boost::multiprecision::sqrt(denominator(q));
  if (n * n != numerator(q) || d * d != denominator(q))
    throw std::logic_error("expected a rational square");
  return Rational(n, d);
}

// The quadratic-over-the-center construction: i, j anticommuting with
// i^2 = a, j^2 = b in the center field K = Q(c).
struct QuaternionPair
{
  RatMat i, j;
  std::vector<Rational> a, b; // coordinates in {1, c, ...}
};

std::optional<QuaternionPair> quaternion_pair(std::vector<RatMat> const &basis, RatMat const &c, std::size_t k)
{
  std::size_t d = c.rows();
  RatMat one = RatMat::identity(d, Rational(1));
  std::vector<RatMat> kpow{one};
  for (std::size_t t = 1; t < k; ++t)
    kpow.push_back(kpow.back() * c);
  auto kflat = flats(kpow);
  auto in_k = [&](RatMat const &m) { return coordinates(kflat, m.data()); };

  for (auto const &x : basis) {
    if (in_k(x))
      continue;
    std::vector<RatMat> span = kpow;
    for (auto const &p : kpow)
      span.push_back(p * x);
    auto co = coordinates(flats(span), (x * x).data());
    if (!co)
      return std::nullopt;
    std::vector<Rational> beta(co->begin() + static_cast<long>(k), co->end());
    RatMat i = x.scaled(2) - combination(kpow, beta);
    for (auto const &y : basis) {
      RatMat j = i * y - y * i;
      if (j.is_zero())
        continue;
      auto a = in_k(i * i), b = in_k(j * j);
      if (!a || !b || !(i * j + j * i).is_zero())
        return std::nullopt;
      return QuaternionPair{i, j, *a, *b};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

} // namespace

std::string to_string(AlgebraKind k)
{
  switch (k) {
  case AlgebraKind::scalars: return "scalars";
  case AlgebraKind::field: return "field";
  case AlgebraKind::quaternion_over_Q: return "quaternion_over_Q";
  case AlgebraKind::cyclic_algebra: return "cyclic_algebra";
  case AlgebraKind::split: return "split";
  case AlgebraKind::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<RatMat> algebra_center(std::vector<RatMat> const &basis)
{
  std::size_t n = basis.size();
  std::size_t d = basis.front().rows();
  RatMat sys(n * d * d, n, Rational(0));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      RatMat comm = basis[k] * basis[l] - basis[l] * basis[k];
      for (std::size_t e = 0; e < d * d; ++e)
        sys(l * d * d + e, k) = comm.data()[e];
    }
  std::vector<RatMat> out;
  for (auto const &c : kernel(sys))
    out.push_back(combination(basis, c));
  return out;
}

std::optional<RatMat> idempotent_from(RatMat const &x, std::vector<RatMat> const &basis)
{
  QPoly f = minimal_polynomial(x);
  auto fs = factor_over_Q(f);
  if (fs.size() >= 2) {
    QPoly g = power(fs.front().first, fs.front().second);
    QPoly h = divmod(f, g).first;
    auto bz = extended_gcd(g, h);
    return evaluate(bz.t * h, x);
  }
  if (fs.size() == 1 && fs.front().second > 1) {
    // x generates a local algebra; g(x) is a nonzero nilpotent. A basis
    // element y with tr(y g(x)) != 0 gives a singular non-nilpotent y g(x).
    RatMat nil = evaluate(fs.front().first, x);
    for (auto const &y : basis) {
      RatMat z = y * nil;
      if (trace(z) != 0)
        return idempotent_from(z, basis);
    }
  }
  return std::nullopt;
}

std::vector<RatVec> column_space(RatMat const &m)
{
  std::vector<RatVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    cols.push_back(m.col(j));
  return span_basis(cols, m.rows(), Rational(0));
}

AlgebraStructure algebra_structure(std::vector<RatMat> const &basis, std::uint64_t seed)
{
  if (basis.empty())
    throw std::invalid_argument("empty algebra basis");
  check_closed(basis);
  AlgebraStructure st;
  st.basis = basis;
  std::size_t n = basis.size();
  std::size_t d = basis.front().rows();
  RatMat one = RatMat::identity(d, Rational(1));
  if (n == 1) {
    st.kind = AlgebraKind::scalars;
    st.center = basis;
    st.element = one;
    st.minpoly = {Rational(-1), Rational(1)};
    st.certified = true;
    st.evidence = "one-dimensional";
    return st;
  }
  st.center = algebra_center(basis);
  std::size_t k = st.center.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_in = [&](std::vector<RatMat> const &from) {
    std::vector<Rational> c;
    for (std::size_t t = 0; t < from.size(); ++t)
      c.emplace_back(coef(rng));
    return combination(from, c);
  };

  std::optional<RatMat> center_gen;
  if (k == 1) {
    center_gen = one;
  }
  auto consider = [&](RatMat const &x, bool central) -> bool {
    ++st.trials;
    if (auto e = idempotent_from(x, basis)) {
      st.kind = AlgebraKind::split;
      st.element = *e;
      st.certified = true;
      st.evidence = "minimal polynomial " + poly_to_string(minimal_polynomial(x)) + " of a sampled element is reducible";
      return true;
    }
    QPoly f = minimal_polynomial(x);
    if (central && !center_gen && static_cast<std::size_t>(degree(f)) == k) {
      center_gen = x;
      st.minpoly = f;
    }
    if (k == n && static_cast<std::size_t>(degree(f)) == n) {
      st.kind = AlgebraKind::field;
      st.element = x;
      st.minpoly = f;
      st.certified = true;
      st.evidence = "element with irreducible minimal polynomial of full degree " + std::to_string(n);
      return true;
    }
    return false;
  };

  if (k > 1)
    for (auto const &c : st.center)
      if (consider(c, true))
        return st;
  for (auto const &b : basis)
    if (consider(b, k == n))
      return st;
  while (st.trials < kAlgebraTrials) {
    bool central = k > 1 && st.trials % 2 == 0;
    if (consider(random_in(central ? st.center : basis), central || k == n))
      return st;
  }

  if (!center_gen || (n != 4 * k) || k > 2) {
    st.kind = AlgebraKind::unknown;
    st.evidence = std::to_string(st.trials) + " samples, none exposed an idempotent";
    return st;
  }
  auto qp = quaternion_pair(basis, *center_gen, k);
  if (!qp) {
    st.kind = AlgebraKind::unknown;
    st.evidence = "no standard quaternion pair over the center";
    return st;
  }

  if (k == 1) {
    Rational a = qp->a[0], b = qp->b[0];
    Integer sa = squarefree_class(a), sb = squarefree_class(b);
    st.i = qp->i.scaled(1 / rational_sqrt(a / Rational(sa)));
    st.j = qp->j.scaled(1 / rational_sqrt(b / Rational(sb)));
    st.a = Rational(sa);
    st.b = Rational(sb);
    st.minpoly = {Rational(-1), Rational(1)};
    auto places = ramified_places(st.a, st.b);
    if (!places.empty()) {
      st.kind = AlgebraKind::quaternion_over_Q;
      st.certified = true;
      std::string ps;
      for (auto const &p : places)
        ps += (ps.empty() ? "" : ",") + (p == kRealPlace ? std::string("inf") : p.str());
      st.evidence = "(" + sa.str() + "," + sb.str() + ") ramified at " + ps;
      return st;
    }
    // split: z^2 = a x^2 + b y^2 with z != 0 gives w = x i + y j with w^2 = z^2
    for (long x = -40; x <= 40; ++x)
      for (long y = -40; y <= 40; ++y) {
        Integer s = sa * x * x + sb * y * y;
        if (s <= 0)
          continue;
        Integer z = boost::multiprecision::sqrt(s);
        if (z * z != s)
          continue;
        RatMat w = st.i.scaled(Rational(x)) + st.j.scaled(Rational(y));
        if (auto e = idempotent_from(w, basis)) {
          st.kind = AlgebraKind::split;
          st.element = *e;
          st.certified = true;
          st.evidence = "(" + sa.str() + "," + sb.str() + ") split: " + std::to_string(x) + "^2*" + sa.str() + " + " +
                        std::to_string(y) + "^2*" + sb.str() + " = " + z.str() + "^2";
          return st;
        }
      }
    st.kind = AlgebraKind::unknown;
    st.evidence = "(" + sa.str() + "," + sb.str() + ") splits everywhere but no small zero divisor was found";
    return st;
  }

  // quadratic center K = Q(r), r = 2c + p1 with r^2 = disc
  QPoly const &cm = st.minpoly;
  Rational p1 = cm[1], p0 = cm[0];
  st.discriminant = p1 * p1 - 4 * p0;
  auto to_r = [&](std::vector<Rational> const &u) {
    return std::pair<Rational, Rational>{u[0] - u[1] * p1 / 2, u[1] / 2};
  };
  auto [a0, a1] = to_r(qp->a);
  auto [b0, b1] = to_r(qp->b);
  st.element = *center_gen;
  st.i = qp->i;
  st.j = qp->j;
  st.a = a0;
  st.a1 = a1;
  st.b = b0;
  st.b1 = b1;
  st.kind = AlgebraKind::cyclic_algebra;
  if (st.discriminant > 0) {
    for (int s : {1, -1})
      if (real_sign(a0, a1 * s, st.discriminant) < 0 && real_sign(b0, b1 * s, st.discriminant) < 0) {
        st.certified = true;
        st.evidence = "quaternion algebra over Q(sqrt(" + to_string(st.discriminant) +
                      ")) ramified at a real place: i^2 and j^2 both negative at the " +
                      (s > 0 ? "positive" : "negative") + " embedding";
        return st;
      }
  }
  st.evidence = std::to_string(st.trials) + " samples consistent with a division algebra (probabilistic)";
  return st;
}

std::string to_string(Decision d)
{
  switch (d) {
  case Decision::reducible: return "reducible";
  case Decision::irreducible: return "irreducible";
  case Decision::unknown: return "unknown";
  }
  return "unknown";
}

IrreducibilityVerdict irreducible_over_Q(MatRep const &rep, std::uint64_t seed)
{
  IrreducibilityVerdict v;
  v.structure = algebra_structure(commutant_basis(rep), seed);
  auto const &st = v.structure;
  v.evidence = to_string(st.kind) + ": " + st.evidence;
  switch (st.kind) {
  case AlgebraKind::split: {
    v.witness = column_space(st.element);
    if (v.witness.empty() || v.witness.size() >= rep.dimension || !is_invariant(rep, v.witness))
      throw std::logic_error("commutant idempotent did not give an invariant subspace");
    v.status = Decision::reducible;
    break;
  }
  case AlgebraKind::scalars:
  case AlgebraKind::field:
  case AlgebraKind::quaternion_over_Q: v.status = Decision::irreducible; break;
  case AlgebraKind::cyclic_algebra:
    v.status = Decision::irreducible;
    v.probabilistic = !st.certified;
    break;
  case AlgebraKind::unknown: v.status = Decision::unknown; break;
  }
  return v;
}

BlockSystemResult<Rational> matrix_block_system_Q(MatRep const &rep, std::size_t order_gate)
{
  std::function<RestrictionCheck<Rational>(MatRep const &)> analyse = [](MatRep const &r) {
    auto v = irreducible_over_Q(r);
    RestrictionCheck<Rational> c;
    c.status = v.status == Decision::reducible ? 0 : (v.status == Decision::irreducible && !v.probabilistic ? 1 : 2);
    c.witness = v.witness;
    c.evidence = v.evidence;
    return c;
  };
  return matrix_block_system(rep, analyse, order_gate);
}

} // namespace jinf
