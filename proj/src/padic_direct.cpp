#include <stdexcept>

#include "localdec_internal.hpp"

namespace jinf {

using namespace detail;

namespace {

std::vector<PadicMat> padic_center(std::vector<PadicMat> const &basis)
{
  std::size_t n = basis.size();
  std::size_t d = basis.front().rows();
  Padic zero = Padic::zero(basis.front()(0, 0).prime());
  PadicMat sys(n * d * d, n, zero);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      PadicMat comm = basis[k] * basis[l] - basis[l] * basis[k];
      for (std::size_t e = 0; e < d * d; ++e)
        sys(l * d * d + e, k) = comm.data()[e];
    }
  std::vector<PadicMat> out;
  for (auto const &c : kernel(sys)) {
    PadicMat m(d, d, zero);
    for (std::size_t k = 0; k < n; ++k)
      m = m + basis[k].scaled(c[k]);
    out.push_back(m);
  }
  return out;
}

QPoly rational_approximation(std::vector<Padic> const &f)
{
  QPoly q;
  for (auto const &c : f)
    q.push_back(c.to_rational());
  return trimmed(q);
}

// Spin test: a basis vector or a sum of two generating a proper subspace.
std::optional<std::vector<PadicVec>> spin_witness(PadicRep const &rep)
{
  std::size_t d = rep.dimension;
  long p = rep.images.front()(0, 0).prime();
  long n = min_precision(rep.images.front());
  Padic zero = Padic::zero(p), one(Rational(1), p, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      PadicVec v(d, zero);
      v[i] = one;
      if (j != i)
        v[j] = one;
      auto w = spin(rep, v);
      if (w.size() < d)
        return w;
    }
  return std::nullopt;
}

QpVerdict decide_padic(PadicRep const &rep)
{
  QpVerdict v;
  std::size_t d = rep.dimension;
  long p = rep.images.front()(0, 0).prime();
  long n = min_precision(rep.images.front());
  v.precision = n;
  if (auto w = spin_witness(rep)) {
    v.status = Decision::reducible;
    v.witness = *w;
    v.evidence = "a basis vector spins to a proper invariant subspace of dimension " + std::to_string(w->size());
    return v;
  }
  auto comm = commutant_basis(rep);
  std::size_t k = comm.size();
  if (k == 1) {
    v.status = Decision::irreducible;
    v.evidence = "commutant is Q_" + std::to_string(p);
    return v;
  }
  bool commutative = true;
  for (auto const &x : comm)
    for (auto const &y : comm)
      if (!(x * y - y * x).is_zero())
        commutative = false;
  if (commutative) {
    // look for an element generating the commutant
    auto candidate = [&](std::size_t t) {
      if (t < k)
        return comm[t];
      Padic c(Rational(static_cast<long>(t - k + 2)), p, n);
      return comm[t % k] + comm[(t + 1) % k].scaled(c);
    };
    for (std::size_t t = 0; t < k + 8; ++t) {
      PadicMat x = candidate(t);
      auto f = padic_minimal_polynomial(x);
      if (f.size() - 1 != k)
        continue;
      QPoly q = rational_approximation(f);
      if (!is_squarefree(q))
        continue;
      auto r = qp_factor_count(q, p);
      if (r.factor_count == 1u) {
        v.status = Decision::irreducible;
        v.evidence = "commutant is a field of degree " + std::to_string(k) + ": " + to_string(r.method);
        return v;
      }
      if (r.factor_count) {
        auto lifted = lift_idempotent(q, p, n);
        if (lifted && finish_reducible(v, rep, evaluate_poly(lifted->e, x.scaled(Padic(Rational(lifted->kappa), p, n))))) {
          v.evidence = "commutant is a product of " + std::to_string(*r.factor_count) + " fields";
          return v;
        }
      }
    }
    v.evidence = "commutative commutant of dimension " + std::to_string(k) + " undecided";
    return v;
  }
  auto center = padic_center(comm);
  if (center.size() == 1 && k == 4) {
    PadicMat one = PadicMat::identity(d, Padic(Rational(1), p, n));
    std::vector<PadicVec> kflat{one.data()};
    for (auto const &x : comm) {
      if (coordinates(kflat, x.data()))
        continue;
      auto co = coordinates(std::vector<PadicVec>{one.data(), x.data()}, (x * x).data());
      if (!co)
        break;
      PadicMat i = x.scaled(Padic(Rational(2), p, n)) - one.scaled((*co)[1]);
      for (auto const &y : comm) {
        PadicMat j = i * y - y * i;
        if (j.is_zero())
          continue;
        Padic a = (i * i)(0, 0), b = (j * j)(0, 0);
        if (a.relative_precision() < 4 || b.relative_precision() < 4)
          throw PrecisionExhausted("quaternion parameters known to too few digits");
        int h = hilbert_symbol(a.to_rational(), b.to_rational(), Integer(p));
        if (h == -1) {
          v.status = Decision::irreducible;
          v.evidence = "commutant is a division quaternion algebra over Q_" + std::to_string(p);
          return v;
        }
        if (auto e = quaternion_split(i, j, a, b); e && finish_reducible(v, rep, *e)) {
          v.evidence = "commutant is a split quaternion algebra over Q_" + std::to_string(p);
          return v;
        }
        break;
      }
      break;
    }
  }
  v.evidence = "commutant of dimension " + std::to_string(k) + " with center of dimension " +
               std::to_string(center.size()) + " undecided";
  return v;
}

} // namespace

QpVerdict irreducible_over_Qp(PadicRep const &rep)
{
  try {
    return decide_padic(rep);
  } catch (PrecisionExhausted const &e) {
    QpVerdict v;
    v.precision_exhausted = true;
    v.precision = min_precision(rep.images.front());
    v.evidence = e.what();
    return v;
  }
}

PadicMat saturated_basis(std::vector<PadicVec> const &vecs, std::size_t dim)
{
  if (vecs.empty())
    throw std::invalid_argument("saturation of an empty family");
  std::size_t m = vecs.size();
  long p = vecs.front().front().prime();
  PadicMat b(dim, m, Padic::zero(p));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < dim; ++r)
      b(r, c) = vecs[c][r];
  std::vector<bool> row_used(dim, false), col_used(m, false);
  std::vector<std::size_t> chosen;
  for (;;) {
    std::size_t pr = dim, pc = m;
    for (std::size_t c = 0; c < m; ++c) {
      if (col_used[c])
        continue;
      for (std::size_t r = 0; r < dim; ++r)
        if (!row_used[r] && !b(r, c).is_zero() && (pr == dim || b(r, c).valuation() < b(pr, pc).valuation())) {
          pr = r;
          pc = c;
        }
    }
    if (pr == dim)
      break;
    Padic inv = Padic(Rational(1), p, b(pr, pc).relative_precision() + 1) / b(pr, pc);
    for (std::size_t r = 0; r < dim; ++r)
      b(r, pc) = b(r, pc) * inv;
    for (std::size_t c = 0; c < m; ++c) {
      if (c == pc || b(pr, c).is_zero())
        continue;
      Padic f = b(pr, c);
      for (std::size_t r = 0; r < dim; ++r)
        b(r, c) = b(r, c) - f * b(r, pc);
    }
    row_used[pr] = true;
    col_used[pc] = true;
    chosen.push_back(pc);
  }
  PadicMat out(dim, chosen.size(), Padic::zero(p));
  for (std::size_t k = 0; k < chosen.size(); ++k)
    for (std::size_t r = 0; r < dim; ++r)
      out(r, k) = b(r, chosen[k]);
  return out;
}

} // namespace jinf
