#ifndef JINF_FINITE_GROUP_HPP
#define JINF_FINITE_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jinf/perm_group.hpp"

namespace jinf {

/// A set of element indices of a FiniteGroup, stored as a bitset.
class ElementSet
{
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  std::size_t universe() const { return size_; }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  std::vector<std::size_t> members() const;

  ElementSet &operator&=(ElementSet const &rhs);
  bool subset_of(ElementSet const &rhs) const;
  bool operator==(ElementSet const &rhs) const { return words_ == rhs.words_; }
  bool operator<(ElementSet const &rhs) const { return words_ < rhs.words_; }
  std::size_t hash() const;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

/// A subgroup of a FiniteGroup: its elements and a small generating set.
struct Subgroup
{
  ElementSet elements;
  std::vector<std::size_t> generators;
  std::size_t order() const { return elements.count(); }
};

/// Element-level view of a small permutation group: every element is
/// enumerated and indexed, with a full multiplication table. Element 0 is the
/// identity.
class FiniteGroup
{
public:
  /// Throws GateExceeded when |G| exceeds the gate.
  explicit FiniteGroup(PermGroup const &g, std::size_t order_gate = kDefaultOrderGate);

  PermGroup const &perm_group() const { return group_; }
  std::size_t order() const { return elements_.size(); }
  Perm const &element(std::size_t i) const { return elements_[i]; }
  /// Throws std::invalid_argument for a non-member.
  std::size_t index_of(Perm const &g) const;

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  /// g^-1 x g
  std::size_t conj(std::size_t x, std::size_t g) const { return mul(inverse_[g], mul(x, g)); }
  std::size_t power(std::size_t a, std::size_t e) const;
  std::size_t element_order(std::size_t a) const { return orders_[a]; }
  std::vector<std::size_t> const &generator_indices() const { return gens_; }
  /// Least common multiple of the element orders.
  std::size_t exponent() const;

  Subgroup closure(std::vector<std::size_t> const &gens) const;
  /// The subgroup generated by h and z.
  Subgroup join(Subgroup const &h, std::size_t z) const;
  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup conjugate(Subgroup const &h, std::size_t g) const;
  Subgroup intersect(Subgroup const &a, Subgroup const &b) const;
  Subgroup from_perm_group(PermGroup const &h) const;
  PermGroup to_perm_group(Subgroup const &h) const;

  bool is_normal(Subgroup const &h) const;
  Subgroup normal_closure(Subgroup const &h) const;
  /// Distinct conjugates of h, h first.
  std::vector<Subgroup> conjugates(Subgroup const &h) const;
  Subgroup normalizer(Subgroup const &h) const;
  Subgroup centralizer(Subgroup const &h) const;
  Subgroup center() const;
  Subgroup commutator_subgroup() const;

  /// Conjugacy classes, the identity class first, then ordered by smallest member.
  std::vector<std::vector<std::size_t>> const &classes() const { return classes_; }
  std::size_t class_of(std::size_t a) const { return class_of_[a]; }

  /// Generators of the cyclic subgroups of prime-power order (one per subgroup).
  std::vector<std::size_t> zuppos() const;

private:
  PermGroup group_;
  std::vector<Perm> elements_;
  std::vector<Point> base_;
  std::map<std::vector<Point>, std::size_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> gens_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// A conjugacy class of subgroups.
struct SubgroupClass
{
  Subgroup representative;
  std::size_t length = 1;
};

/// All subgroups up to conjugacy, by cyclic extension with zuppos, sorted by order.
std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &g);

/// Conjugacy-class representatives of the maximal subgroups.
std::vector<Subgroup> maximal_subgroup_classes(FiniteGroup const &g);
std::vector<PermGroup> maximal_subgroups(PermGroup const &g,
                                         std::size_t order_gate = kDefaultOrderGate);

/// Intersection of all maximal subgroups.
Subgroup frattini_subgroup(FiniteGroup const &g);
PermGroup frattini(PermGroup const &g, std::size_t order_gate = kDefaultOrderGate);

/// Every normal subgroup, sorted by order.
std::vector<Subgroup> normal_subgroups(FiniteGroup const &g);

/// Structural tags recognized by recognize_special.
struct SpecialTags
{
  bool cyclic = false;
  bool elementary_abelian = false;
  /// Prime p when |G| is a nontrivial power of p, else 0.
  std::size_t p_group = 0;
  /// |G| when G is generalized quaternion, else 0.
  std::size_t generalized_quaternion = 0;
  bool extraspecial = false;

  bool none() const
  {
    return !cyclic && !elementary_abelian && p_group == 0 && generalized_quaternion == 0 &&
           !extraspecial;
  }
  std::vector<std::string> names() const;
};

SpecialTags recognize_special(PermGroup const &g, std::size_t order_gate = kDefaultOrderGate);
SpecialTags recognize_special(FiniteGroup const &g);

} // namespace jinf

#endif
