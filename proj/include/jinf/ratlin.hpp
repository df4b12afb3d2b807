#ifndef JINF_RATLIN_HPP
#define JINF_RATLIN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jinf/block_system.hpp"
#include "jinf/matrix.hpp"
#include "jinf/poly.hpp"
#include "jinf/rep.hpp"

namespace jinf {

/// Q[t]/(m) for an irreducible integer polynomial m. Elements are residues
/// given as coefficient vectors, constant term first.
class NumberRing
{
public:
  NumberRing() = default;
  /// Throws std::invalid_argument unless m has degree >= 1 and is irreducible.
  explicit NumberRing(QPoly modulus);

  QPoly const &modulus() const { return m_; }
  std::size_t degree() const { return m_.size() - 1; }
  QPoly reduce(QPoly const &a) const;
  QPoly mul(QPoly const &a, QPoly const &b) const;
  /// Matrix of multiplication by a on the power basis (column vectors).
  RatMat multiplication_matrix(QPoly const &a) const;
  /// Rational matrix of a K-matrix: each entry becomes its multiplication block.
  RatMat expand(std::vector<std::vector<QPoly>> const &m) const;

private:
  QPoly m_;
};

enum class AlgebraKind
{
  scalars,
  field,
  quaternion_over_Q,
  cyclic_algebra,
  split,
  unknown
};

std::string to_string(AlgebraKind k);

/// What is known about a finite-dimensional semisimple algebra given by a
/// multiplicatively closed matrix basis.
struct AlgebraStructure
{
  AlgebraKind kind = AlgebraKind::unknown;
  std::vector<RatMat> basis;
  std::vector<RatMat> center;
  /// field: an element generating the commutant; split: the idempotent;
  /// cyclic_algebra: the center generator c.
  RatMat element;
  /// field: minimal polynomial of element; cyclic_algebra: of the center generator.
  QPoly minpoly;
  /// quaternion_over_Q: i^2 = a, j^2 = b with a, b squarefree integers.
  /// cyclic_algebra: a = a0 + a1 r, b = b0 + b1 r with r = 2c + minpoly[1],
  /// r^2 = discriminant.
  RatMat i, j;
  Rational a, b, a1, b1, discriminant;
  /// Exact certificate (as opposed to "every sample behaved like a division algebra").
  bool certified = false;
  std::size_t trials = 0;
  std::string evidence;
};

/// Fixed trial budget of the sampler.
inline constexpr std::size_t kAlgebraTrials = 64;

/// Structure of the algebra spanned by basis (which must contain the
/// identity and be closed under multiplication; checked, std::invalid_argument).
AlgebraStructure algebra_structure(std::vector<RatMat> const &basis, std::uint64_t seed = 1);

/// Center of the algebra spanned by basis, as matrices.
std::vector<RatMat> algebra_center(std::vector<RatMat> const &basis);

/// A nontrivial idempotent in the algebra spanned by basis derived from x,
/// when the minimal polynomial of x exposes one.
std::optional<RatMat> idempotent_from(RatMat const &x, std::vector<RatMat> const &basis);

/// Column space of a matrix as echelon rows.
std::vector<RatVec> column_space(RatMat const &m);

enum class Decision
{
  reducible,
  irreducible,
  unknown
};

std::string to_string(Decision d);

struct IrreducibilityVerdict
{
  Decision status = Decision::unknown;
  /// reducible: basis of a proper nonzero invariant subspace.
  std::vector<RatVec> witness;
  AlgebraStructure structure;
  bool probabilistic = false;
  std::string evidence;
};

IrreducibilityVerdict irreducible_over_Q(MatRep const &rep, std::uint64_t seed = 1);

/// Block system search over Q with irreducible_over_Q as the restriction test.
BlockSystemResult<Rational> matrix_block_system_Q(MatRep const &rep, std::size_t order_gate = kDefaultOrderGate);

/// Place index for the real completion.
inline constexpr long kRealPlace = 0;

/// Hilbert symbol (a, b)_v at a prime v or at kRealPlace. Throws on zero input.
int hilbert_symbol(Rational const &a, Rational const &b, Integer const &place);
/// Whether (a, b) is a division algebra over Q_v (v prime or kRealPlace).
bool quaternion_is_division(Rational const &a, Rational const &b, Integer const &place);
/// Whether (a, b) is a division algebra over Q, scanning the real place, 2
/// and every prime dividing a numerator or denominator.
bool quaternion_is_division_over_Q(Rational const &a, Rational const &b);
/// Places where (a, b) ramifies (kRealPlace for the real place).
std::vector<Integer> ramified_places(Rational const &a, Rational const &b);

/// Prime divisors by trial division (with a probable-prime check on the
/// cofactor).
std::vector<Integer> prime_divisors(Integer n);
/// Squarefree representative of the square class of a nonzero rational.
Integer squarefree_class(Rational const &q);

/// Matrix to text, one bracketed row per line.
std::string to_string(RatMat const &m);

} // namespace jinf

#endif
