#ifndef JINF_GROUPS_HPP
#define JINF_GROUPS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jinf/perm_group.hpp"

namespace jinf::groups {

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Cyclic group generated by an n-cycle.
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n acting on the vertices of an n-gon (n >= 3).
PermGroup dihedral(std::size_t n);
/// Klein four-group acting regularly on 4 points.
PermGroup klein_four();

/// Regular permutation representation of an abstract group on {0..n-1}
/// given by its multiplication; generators are the listed element indices.
PermGroup regular_representation(std::size_t n,
                                 std::function<std::size_t(std::size_t, std::size_t)> const &mul,
                                 std::vector<std::size_t> const &gens);

/// Generalized quaternion group of order 2^k (k >= 3), regular action.
/// Generators: x of order 2^(k-1), y with y^2 = x^(2^(k-2)), y^-1 x y = x^-1.
PermGroup generalized_quaternion(std::size_t order);
/// Semidihedral group of order 2^k (k >= 4), regular action.
/// Generators: x of order 2^(k-1), y of order 2, y x y = x^(2^(k-2) - 1).
PermGroup semidihedral(std::size_t order);

/// Extraspecial group 2^(1+6)_+, the central product of three dihedral
/// groups of order 8, in its regular representation (degree 128).
PermGroup extraspecial_central_d8_cube();

/// PSL(2,q) or PGL(2,q) on the q+1 points of the projective line, q prime.
PermGroup projective_line_group(std::size_t q, bool general);
/// GL(3,2) = PSL(2,7) acting on the 7 nonzero vectors of F_2^3.
PermGroup gl32_on_points();
/// AGL(1,p) on p points, or a subgroup x -> a x + b with a in a subgroup of
/// F_p^* of the given order.
PermGroup affine_1d(std::size_t p, std::size_t multiplier_order);
/// AGL(1,8), or AGammaL(1,8) when with_frobenius, on the 8 field elements.
PermGroup affine_f8(bool with_frobenius);
/// AGL(3,2) on the 8 vectors of F_2^3.
PermGroup agl32();

PermGroup direct_product(PermGroup const &a, PermGroup const &b);

/// Imprimitive wreath product F wr P on |Omega| blocks of F's degree.
/// Point (block b, point x) has index b * deg(F) + x.
struct Wreath
{
  PermGroup group;
  PermGroup base;
  std::size_t block_size = 0;
  std::size_t blocks = 0;
  /// Lift of a permutation of the blocks to the shadow group.
  Perm lift_top(Perm const &top) const;
  /// Generators of F acting on block b.
  std::vector<Perm> factor_generators(std::size_t b) const;
  /// Block action of a shadow element.
  Perm project(Perm const &g) const;
  std::vector<Perm> factor_gens;
};
Wreath wreath_product(PermGroup const &factor, PermGroup const &top);

struct NamedGroup
{
  std::string name;
  PermGroup group;
};

/// Primitive groups of degree 2 to 8 whose order is at most the default
/// order gate (so Sym(7), Alt(8), Sym(8) are left out).
std::vector<NamedGroup> primitive_corpus();

} // namespace jinf::groups

#endif
