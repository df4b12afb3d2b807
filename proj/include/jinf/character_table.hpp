#ifndef JINF_CHARACTER_TABLE_HPP
#define JINF_CHARACTER_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "jinf/finite_group.hpp"
#include "jinf/numeric.hpp"

namespace jinf {

/// An element of Q(zeta_n) as coefficients of 1, zeta, ..., zeta^(phi(n)-1),
/// where zeta = exp(2 pi i / n).
using CyclotomicValue = std::vector<Rational>;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(std::size_t n);

/// Reduces a coefficient vector in powers of zeta_n modulo the n-th
/// cyclotomic polynomial, to length phi(n).
CyclotomicValue reduce_cyclotomic(std::vector<Rational> coeffs, std::size_t n);

/// Renders a value as a polynomial in z = zeta_n, e.g. "-1 - z^2".
std::string format_cyclotomic(CyclotomicValue const &v);

struct CharacterTable
{
  std::size_t group_order = 1;
  /// Order n of the root of unity in the value basis (the group exponent).
  std::size_t root_order = 1;
  std::vector<Perm> class_representatives;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> element_orders;
  /// inverse_class[j] is the class containing the inverses of class j.
  std::vector<std::size_t> inverse_class;
  /// values[i][j] = chi_i(g_j). Row 0 is the trivial character.
  std::vector<std::vector<CyclotomicValue>> values;
  std::vector<std::size_t> degrees;

  /// Classes on which chi_i takes the value chi_i(1).
  std::vector<std::size_t> kernel_classes(std::size_t i) const;
};

/// Burnside-Dixon over a prime l = 1 mod exponent, lifted to exact
/// cyclotomic values. Throws GateExceeded above the order gate.
CharacterTable character_table(FiniteGroup const &g);
CharacterTable character_table(PermGroup const &g, std::size_t order_gate = kDefaultOrderGate);

/// Exact check of row orthogonality, sum of squared degrees and table shape.
bool table_is_consistent(CharacterTable const &t);

/// Least sum of degrees over sets of irreducible characters whose kernels
/// intersect trivially.
std::size_t min_faithful_degree(CharacterTable const &t);

} // namespace jinf

#endif
