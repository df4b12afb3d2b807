#ifndef JINF_LOCALDEC_HPP
#define JINF_LOCALDEC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jinf/block_system.hpp"
#include "jinf/padic.hpp"
#include "jinf/poly.hpp"
#include "jinf/ratlin.hpp"

namespace jinf {

using PadicVec = std::vector<Padic>;
using PadicRep = MatRepT<Padic>;

enum class QpMethod
{
  squarefree_hensel,
  eisenstein_shift,
  newton_polygon_bound
};

std::string to_string(QpMethod m);

struct QpFactorReport
{
  QPoly polynomial;
  long p = 2;
  /// Definite number of irreducible factors over Q_p, when certified.
  std::optional<std::size_t> factor_count;
  /// newton_polygon_bound: number of segments, a lower bound on the count.
  std::size_t lower_bound = 1;
  QpMethod method = QpMethod::newton_polygon_bound;
  /// eisenstein_shift: the shift c with f(x + c) Eisenstein.
  long shift = 0;
};

/// Number of irreducible factors of f over Q_p. Throws std::invalid_argument
/// when f is not squarefree over Q or has degree < 1.
QpFactorReport qp_factor_count(QPoly const &f, long p);

/// Monic integral polynomial with the roots of f scaled by an integer kappa
/// (kappa^n f(x / kappa) for the primitive f of leading coefficient kappa).
std::pair<ZPoly, Integer> monic_integral(QPoly const &f);

struct QpVerdict
{
  Decision status = Decision::unknown;
  /// reducible: basis of a proper nonzero invariant subspace over Q_p.
  std::vector<PadicVec> witness;
  /// reducible: an idempotent of the commutant whose image is the witness.
  std::optional<PadicMat> idempotent;
  /// Precision the decision was made at.
  long precision = 0;
  /// Unknown because every rung of the precision ladder ran out of digits.
  bool precision_exhausted = false;
  std::string evidence;
};

/// Irreducibility over Q_p of a rational representation. Runs at precision,
/// doubling up to kPrecisionDoublings times when digits run out; a definite
/// reducible verdict is re-verified at twice the precision.
QpVerdict irreducible_over_Qp(MatRep const &rep, long p, long precision = kDefaultPrecision);

/// Irreducibility of a representation given by p-adic matrices.
QpVerdict irreducible_over_Qp(PadicRep const &rep);

struct PadicConstituent
{
  PadicRep rep;
  /// Columns: a saturated Z_p-basis of the constituent inside Z_p^d.
  PadicMat basis;
  long precision = 0;
};

/// Splits a p-integral rational representation that is reducible over Q_p
/// into two constituents on saturated lattices, each checked for the
/// relations mod p^(N/2), integrality and unit determinants. Throws
/// std::invalid_argument when the rep is not p-integral or not reducible
/// over Q_p, PrecisionExhausted when checks cannot be made.
std::vector<PadicConstituent> padic_split(MatRep const &rep, long p, long precision = kDefaultPrecision);

/// Saturated lattice basis of the span of the given vectors: columns with an
/// identity submatrix and integral entries.
PadicMat saturated_basis(std::vector<PadicVec> const &vecs, std::size_t dim);

/// Block system search over Q_p.
BlockSystemResult<Rational> matrix_block_system_Qp(MatRep const &rep, long p, long precision = kDefaultPrecision,
                                                   std::size_t order_gate = kDefaultOrderGate);
BlockSystemResult<Padic> matrix_block_system_Qp(PadicRep const &rep, std::size_t order_gate = kDefaultOrderGate);

PadicRep to_padic(MatRep const &rep, long p, long precision);

} // namespace jinf

#endif
