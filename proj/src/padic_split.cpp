#include <stdexcept>

#include "localdec_internal.hpp"

namespace jinf {

using namespace detail;

namespace {

// Constituent on the saturated lattice spanned by the image of e.
PadicConstituent constituent(PadicRep const &prep, PadicMat const &e, long half)
{
  std::size_t d = prep.dimension;
  auto cols = padic_column_space(e);
  PadicMat b = saturated_basis(cols, d);
  std::size_t k = b.cols();
  // rows where the basis is the identity
  std::vector<std::size_t> rows;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < d; ++r)
      if (b(r, c).valuation() == 0 && b(r, c).residue(1) == 1) {
        bool unit_row = true;
        for (std::size_t c2 = 0; c2 < k; ++c2)
          if (c2 != c && !b(r, c2).is_zero())
            unit_row = false;
        if (unit_row) {
          rows.push_back(r);
          break;
        }
      }
  if (rows.size() != k)
    throw PrecisionExhausted("saturated basis lost its identity rows");
  std::vector<PadicMat> mats;
  for (auto const &a : prep.images) {
    PadicMat ab = a * b;
    PadicMat c(k, k, Padic::zero(a(0, 0).prime()));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        c(i, j) = ab(rows[i], j);
    if (!(ab - b * c).is_zero())
      throw PrecisionExhausted("constituent is not invariant at this precision");
    if (min_valuation(c) < 0)
      throw std::logic_error("constituent matrix is not integral");
    if (determinant(c).valuation() != 0)
      throw std::logic_error("constituent matrix is not invertible over Z_p");
    mats.push_back(truncated(c, half));
  }
  PadicConstituent out;
  out.rep = rep_from_data(prep.group.degree(), prep.generators, mats, prep.elements.size());
  out.rep.ring = prep.ring;
  out.basis = b;
  out.precision = half;
  return out;
}

} // namespace

std::vector<PadicConstituent> padic_split(MatRep const &rep, long p, long precision)
{
  for (auto const &m : rep.images) {
    for (auto const &x : m.data())
      if (x != 0 && valuation(x, Integer(p)) < 0)
        throw std::invalid_argument("representation is not p-integral");
    if (valuation(determinant(m), Integer(p)) != 0)
      throw std::invalid_argument("a generator image is not invertible over Z_p");
  }
  auto v = irreducible_over_Qp(rep, p, precision);
  if (v.status != Decision::reducible || !v.idempotent)
    throw std::invalid_argument("representation does not split over Q_p: " + v.evidence);
  long n = v.precision;
  PadicRep prep = to_padic(rep, p, n);
  PadicMat const &e = *v.idempotent;
  PadicMat one = PadicMat::identity(rep.dimension, Padic(Rational(1), p, n));
  std::vector<PadicConstituent> out;
  out.push_back(constituent(prep, e, n / 2));
  out.push_back(constituent(prep, one - e, n / 2));
  return out;
}

BlockSystemResult<Rational> matrix_block_system_Qp(MatRep const &rep, long p, long precision, std::size_t order_gate)
{
  std::function<RestrictionCheck<Rational>(MatRep const &)> analyse = [&](MatRep const &r) {
    auto v = irreducible_over_Qp(r, p, precision);
    RestrictionCheck<Rational> c;
    c.status = v.status == Decision::reducible ? 0 : (v.status == Decision::irreducible ? 1 : 2);
    c.evidence = v.evidence;
    return c;
  };
  return matrix_block_system(rep, analyse, order_gate);
}

BlockSystemResult<Padic> matrix_block_system_Qp(PadicRep const &rep, std::size_t order_gate)
{
  std::function<RestrictionCheck<Padic>(PadicRep const &)> analyse = [](PadicRep const &r) {
    auto v = irreducible_over_Qp(r);
    RestrictionCheck<Padic> c;
    c.status = v.status == Decision::reducible ? 0 : (v.status == Decision::irreducible ? 1 : 2);
    c.witness = v.witness;
    c.evidence = v.evidence;
    return c;
  };
  return matrix_block_system(rep, analyse, order_gate);
}

} // namespace jinf
