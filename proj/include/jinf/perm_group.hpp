#ifndef JINF_PERM_GROUP_HPP
#define JINF_PERM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jinf/numeric.hpp"
#include "jinf/perm.hpp"

namespace jinf {

/// Raised when an operation would exceed a configured size gate.
class GateExceeded : public std::runtime_error
{
public:
  GateExceeded(std::string gate, std::string const &what)
  : std::runtime_error(what), gate_(std::move(gate)) {}
  std::string const &gate() const { return gate_; }

private:
  std::string gate_;
};

/// Default bound on |G| for element-level algorithms (subgroup lattices,
/// maximal subgroups, character tables, cosets).
inline constexpr std::size_t kDefaultOrderGate = 4096;

/// A finite permutation group with a stabilizer chain computed by the
/// deterministic Schreier-Sims algorithm. Immutable; copies share the chain.
class PermGroup
{
public:
  /// The trivial group of degree 1.
  PermGroup();
  /// Group generated by gens on `degree` points. Identity generators are
  /// dropped. base_prefix points are placed first in the base, which makes
  /// pointwise stabilizers of those points directly available.
  PermGroup(std::size_t degree, std::vector<Perm> gens,
            std::vector<Point> const &base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const;
  std::vector<Perm> const &generators() const;
  Integer const &order() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(Perm const &g) const;
  /// Sift g through the chain; the residue is the identity iff g is a member.
  Perm sift(Perm const &g) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Perm> stabilizer_generators(std::size_t level) const;

  /// Every element, identity first. Throws GateExceeded above max_order.
  std::vector<Perm> elements(std::size_t max_order = kDefaultOrderGate) const;

  std::vector<Point> orbit(Point x) const;
  /// Orbit partition, cells sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  bool is_subgroup_of(PermGroup const &other) const;
  bool same_group(PermGroup const &other) const;
  bool is_normal_in(PermGroup const &other) const;
  bool is_abelian() const;

  PermGroup conjugated_by(Perm const &g) const;
  /// The group generated by this group and `extra`, extending the existing
  /// chain instead of rebuilding it.
  PermGroup extended_by(std::vector<Perm> const &extra) const;

private:
  struct Chain;
  std::shared_ptr<Chain const> chain_;
};

/// Builds a group from a nonempty list of equal-degree generators.
/// Throws std::invalid_argument on an empty list or degree mismatch.
PermGroup group_from_generators(std::vector<Perm> const &gens);

/// A subgroup together with the group it lives in.
struct SubgroupHandle
{
  PermGroup parent;
  PermGroup group;

  /// Throws std::invalid_argument if some generator is outside parent.
  SubgroupHandle(PermGroup parent_group, std::vector<Perm> const &gens);
  SubgroupHandle(PermGroup parent_group, PermGroup sub);

  std::vector<Perm> const &generators() const { return group.generators(); }
  Integer const &order() const { return group.order(); }
  Integer index() const { return parent.order() / group.order(); }
};

// Orbits and blocks ------------------------------------------------------

std::vector<std::vector<Point>> orbits(PermGroup const &g);

struct BlockSystems
{
  /// Each system is a partition of the points into blocks, sorted.
  std::vector<std::vector<std::vector<Point>>> minimal_systems;
  bool primitive = false;
};

/// Minimal nontrivial block systems of a transitive group.
/// Throws std::invalid_argument for an intransitive group.
BlockSystems minimal_blocks(PermGroup const &g);

/// Finest block system in which `a` and `b` lie in a common block.
std::vector<std::vector<Point>> block_system_joining(PermGroup const &g,
                                                     Point a, Point b);

// Subgroup operators -----------------------------------------------------

/// <H^g : g in G>
PermGroup normal_closure(PermGroup const &g, PermGroup const &h);

/// Right coset action of G on the cosets of H. The representative list
/// starts with the identity; image[i][j] is the coset index of rep_j * gen_i.
struct CosetAction
{
  std::vector<Perm> representatives;
  std::vector<Perm> generator_images;
};
CosetAction coset_action(PermGroup const &g, PermGroup const &h,
                         std::size_t max_index = kDefaultOrderGate);

/// Kernel of the homomorphism G -> Sym(k) sending generators()[i] to
/// images[i]. Images must define a homomorphism.
PermGroup action_kernel(PermGroup const &g, std::vector<Perm> const &images);

/// Intersection of the conjugates of H in G, via the kernel of the coset action.
PermGroup core(PermGroup const &g, PermGroup const &h,
               std::size_t max_index = kDefaultOrderGate);

/// Distinct G-conjugates of H (H first), found as an orbit under conjugation.
std::vector<PermGroup> conjugates(PermGroup const &g, PermGroup const &h);

/// Elementwise intersection. Enumerates the smaller group; gated.
PermGroup intersection(PermGroup const &a, PermGroup const &b,
                       std::size_t max_order = kDefaultOrderGate);

PermGroup join(PermGroup const &a, PermGroup const &b);

struct RelativeOps
{
  PermGroup normal_closure;
  PermGroup core;
  PermGroup normalizer;
  PermGroup centralizer;
  PermGroup center_of_g;
};

/// Throws std::invalid_argument unless H <= G; GateExceeded above the gate.
RelativeOps relative_ops(PermGroup const &g, PermGroup const &h,
                         std::size_t order_gate = kDefaultOrderGate);

} // namespace jinf

#endif
