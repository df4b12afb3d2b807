#ifndef JINF_WREATH_SHADOW_HPP
#define JINF_WREATH_SHADOW_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "jinf/basal.hpp"
#include "jinf/groups.hpp"

namespace jinf {

/// Nonabelian simple factors available for shadows, at minimal degree.
/// Tags: "A5" (degree 5), "PSL(2,7)" (degree 7). Throws std::invalid_argument otherwise.
PermGroup simple_factor(std::string const &tag);

/// A wreath shadow F wr_Omega P with its basal family.
struct WreathShadow
{
  std::string factor_tag;
  PermGroup factor;
  PermGroup top;
  groups::Wreath wreath;
  ShadowModel model;
};

WreathShadow make_wreath_shadow(std::string const &factor_tag, PermGroup const &top);

/// The affine group A = V x| C_p on V = F_p^p, C_p cycling coordinates.
/// Point v has index sum v_i p^i. Generators: the p unit translations, then the shift.
PermGroup cyclic_affine_group(std::size_t p);
/// Translation subgroup V of cyclic_affine_group(p).
PermGroup translation_subgroup(std::size_t p);
/// W = {v : v_0 = 0}, of index p in V and not normal in A.
PermGroup coordinate_hyperplane(std::size_t p);

/// The shadow F wr_V A of the affine group with the named subgroups
/// H = base x| W and M = base x| V.
struct AffineShadowExample
{
  std::size_t p = 2;
  WreathShadow shadow;
  PermGroup h;
  PermGroup m;
};

/// p in {2, 3}; throws std::invalid_argument otherwise.
AffineShadowExample build_wreath_shadow(std::string const &factor_tag, std::size_t p);

struct WreathVerdicts
{
  ShadowVerdict g;
  ShadowVerdict h;
  ShadowVerdict m;
  /// Index of H in G.
  Integer h_index;
  std::size_t maximals_over_h = 0;
  bool m_is_unique_maximal_over_h = false;
  bool w_normal_in_top = false;
};

WreathVerdicts wreath_verdicts(AffineShadowExample const &ex);

/// Transitive top groups used for the maximal-subgroup criterion corpus, with names.
std::vector<groups::NamedGroup> shadow_top_corpus();

} // namespace jinf

#endif
