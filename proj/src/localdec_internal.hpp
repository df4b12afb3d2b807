#ifndef JINF_LOCALDEC_INTERNAL_HPP
#define JINF_LOCALDEC_INTERNAL_HPP

#include <optional>
#include <vector>

#include "jinf/localdec.hpp"

namespace jinf::detail {

/// An integer polynomial E with E(kappa x) an idempotent of Q_p[x]/(f) to
/// p^digits, cutting out the first factor of the monic integral rescaling of
/// f mod p. Needs that rescaling squarefree mod p with at least two factors.
struct LiftedIdempotent
{
  ZPoly e;
  Integer kappa;
};
std::optional<LiftedIdempotent> lift_idempotent(QPoly const &f, long p, long digits);

/// poly(x) by Horner's rule at the precision of x.
PadicMat evaluate_poly(ZPoly const &poly, PadicMat const &x);

std::vector<PadicVec> padic_column_space(PadicMat const &m);

/// Checks that e is a proper idempotent with invariant image and records it
/// as the reducibility witness. False when the checks fail.
bool finish_reducible(QpVerdict &v, PadicRep const &rep, PadicMat const &e);

/// e = (1 + w / delta) / 2 for the first w = x i + y j (small integers x, y)
/// with a x^2 + b y^2 = delta^2 a nonzero square in Q_p.
std::optional<PadicMat> quaternion_split(PadicMat const &i, PadicMat const &j, Padic const &a, Padic const &b);

/// Minimal polynomial of a p-adic square matrix (monic, constant first).
std::vector<Padic> padic_minimal_polynomial(PadicMat const &m);

} // namespace jinf::detail

#endif
