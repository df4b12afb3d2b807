#ifndef JINF_BASAL_HPP
#define JINF_BASAL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jinf/groups.hpp"
#include "jinf/perm_group.hpp"

namespace jinf {

/// Evidence that B^G is the internal direct product of the conjugates of B.
struct BasalCertificate
{
  PermGroup subgroup;
  /// The distinct G-conjugates of B (the set Omega_B), B first.
  std::vector<PermGroup> conjugates;
  PermGroup closure;
  bool commuting = false;
  /// Pairwise trivial intersections; empty when too large to enumerate and
  /// not implied by the other two facts.
  std::optional<bool> trivial_intersections;
  /// |B^G| equals the product of the conjugate orders.
  bool order_identity = false;
  std::string label;

  bool holds() const { return commuting && order_identity; }
};

struct BasalCheck
{
  std::optional<BasalCertificate> certificate;
  /// Why B is not basal, when certificate is empty.
  std::string reason;
  /// Data gathered in either case.
  BasalCertificate data;
};

/// Throws std::invalid_argument for trivial B or B not contained in G.
BasalCheck is_basal(PermGroup const &g, PermGroup const &b, std::string label = {},
                    std::size_t order_gate = kDefaultOrderGate);

/// Recomputes the normal closure and the direct-product identity from scratch.
bool recheck_certificate(PermGroup const &g, BasalCertificate const &cert);

/// Index of the conjugate equal to x, or conjugates.size() if none.
std::size_t find_conjugate(std::vector<PermGroup> const &conjugates, PermGroup const &x);

struct IntersectionBasal
{
  BasalCertificate certificate;
  /// Indices into the list of conjugates of K whose intersection is K_J.
  std::vector<std::size_t> subset;
  std::vector<PermGroup> conjugates_of_k;
  /// Whether Z(K^G) = 1, the finite stand-in for "no nontrivial abelian
  /// normal subgroups". Reported, not enforced.
  bool closure_center_trivial = false;
};

/// Intersections K_J of conjugates of K, J of maximal size with K_J
/// nontrivial, certified basal. Requires K normal in K^G; K^G must be
/// within the order gate.
IntersectionBasal basal_from_intersections(PermGroup const &g, PermGroup const &k,
                                           std::size_t order_gate = kDefaultOrderGate);

/// Kernel and image of a projection of the shadow group onto a top group,
/// used to reach subgroups above the kernel without enumerating the shadow.
struct TopQuotient
{
  PermGroup base;
  PermGroup top;
  std::function<Perm(Perm const &)> project;
  std::function<Perm(Perm const &)> lift;

  /// Preimage of a subgroup of the top group.
  PermGroup preimage(PermGroup const &top_subgroup) const;
  /// Image of a subgroup of the shadow group.
  PermGroup image(PermGroup const &h) const;
};

struct ShadowModel
{
  PermGroup group;
  std::vector<BasalCertificate> basal_family;
  std::string provenance;
  std::optional<TopQuotient> quotient;
};

/// Finite model F wr P with basal family: one coordinate factor, then the
/// product of the factors over one block of each nontrivial block system of
/// P (by block size), then the whole base group.
ShadowModel wreath_shadow_model(groups::Wreath const &w, PermGroup const &top);

/// Every block system of a transitive group, as blocks containing point 0,
/// including the trivial ones, ordered by block size.
std::vector<std::vector<Point>> all_blocks_containing_zero(PermGroup const &g);

/// Orbits of H acting by conjugation on the conjugates listed in a certificate.
std::vector<std::vector<std::size_t>> conjugation_orbits(BasalCertificate const &cert,
                                                         PermGroup const &h);

/// Core_G(H), through the top quotient when H contains its kernel.
PermGroup shadow_core(ShadowModel const &model, PermGroup const &h);

struct PermjiWitness
{
  std::size_t family_index = 0;
  std::vector<std::vector<std::size_t>> orbits;
};

/// First family member B such that H is intransitive on Omega_B and
/// Core_G(H) normalizes every conjugate of B.
std::optional<PermjiWitness> permji_witness(ShadowModel const &model, PermGroup const &h);

struct ShadowVerdict
{
  bool just_infinite = false;
  std::optional<PermjiWitness> witness;
  std::string label = "shadow verdict";
};

ShadowVerdict shadow_ji_verdict(ShadowModel const &model, PermGroup const &h);

/// Every maximal subgroup of G containing H (all conjugates, not classes).
std::vector<PermGroup> maximal_subgroups_containing(ShadowModel const &model, PermGroup const &h,
                                                    std::size_t order_gate = kDefaultOrderGate);

struct MaxcorReport
{
  ShadowVerdict lhs;
  std::vector<ShadowVerdict> maximal_verdicts;
  std::vector<PermGroup> maximals;
  bool rhs = true;
  bool agree = false;
};

/// Compares the verdict on H with the verdicts on the maximal subgroups above
/// H. Throws std::invalid_argument unless H is normal (pass require_normal =
/// false to measure non-normal H).
MaxcorReport maxcor_equivalence_check(ShadowModel const &model, PermGroup const &h,
                                      bool require_normal = true,
                                      std::size_t order_gate = kDefaultOrderGate);

/// First preimage H of a top-group subgroup class representative with H
/// not ji while every maximal subgroup above H is ji. Requires a top quotient.
std::optional<std::pair<PermGroup, MaxcorReport>>
find_non_normal_separation(ShadowModel const &model, std::size_t order_gate = kDefaultOrderGate);

/// Nontrivial normal subgroups of the shadow group. With a top quotient
/// whose kernel is the unique minimal normal subgroup, these are the
/// preimages of the normal subgroups of the top group.
std::vector<PermGroup> shadow_normal_subgroups(ShadowModel const &model,
                                               std::size_t order_gate = kDefaultOrderGate);

} // namespace jinf

#endif
