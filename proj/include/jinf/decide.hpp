#ifndef JINF_DECIDE_HPP
#define JINF_DECIDE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jinf/localdec.hpp"
#include "jinf/ratlin.hpp"
#include "jinf/wreath_shadow.hpp"

namespace jinf {

/// A split virtually abelian group A x| Q with A = O^d, O = Z (p = 0) or Z_p.
/// The action is either rational (entries read in O) or p-adic.
struct VaProfile
{
  long p = 0;
  std::variant<MatRep, PadicRep> action;
  /// Digits used when a rational action is examined over Q_p.
  long precision = kDefaultPrecision;
  /// Sampling seed of the rational algebra analysis; never changes a verdict.
  std::uint64_t seed = 1;
  std::string name;

  bool padic() const { return std::holds_alternative<PadicRep>(action); }
  PermGroup const &group() const;
  std::size_t dimension() const;
  bool faithful() const;
  std::string ring() const { return p == 0 ? "Z" : "Z" + std::to_string(p); }
  std::string field() const { return p == 0 ? "Q" : "Q" + std::to_string(p); }
};

VaProfile make_profile(MatRep action, long p = 0, std::string name = {});
VaProfile make_profile(PadicRep action, std::string name = {});

struct ValidationReport
{
  bool valid = false;
  /// First violated condition: "faithful", "integral" or "unit-determinant".
  std::string failed;
  std::vector<std::string> trace;
};

ValidationReport validate_va_profile(VaProfile const &profile);

enum class VerdictStatus
{
  ji,
  not_ji,
  hji,
  not_hji,
  hypothesis_failed,
  unknown
};

std::string to_string(VerdictStatus s);

struct Certificate
{
  /// Basis of a proper invariant subspace (not_ji), in whichever field applies.
  std::vector<RatVec> invariant_subspace;
  std::vector<PadicVec> padic_invariant_subspace;
  /// hypothesis_failed: "i", "ii" or "iii".
  std::string failed_condition;
  std::vector<std::string> trace;
};

struct Verdict
{
  VerdictStatus status = VerdictStatus::unknown;
  Certificate witness;
  std::string provenance;
};

/// Throws std::invalid_argument for an invalid profile.
Verdict va_just_infinite(VaProfile const &profile);
/// A x| S for S <= Q.
Verdict subgroup_ji(VaProfile const &profile, SubgroupHandle const &s);

struct ScanRow
{
  std::string label;
  PermGroup subgroup;
  Integer index;
  Verdict verdict;
};

/// One row per class of maximal subgroups of Q (for Q of prime order the
/// single row is A itself).
std::vector<ScanRow> maximal_scan(VaProfile const &profile, std::size_t order_gate = kDefaultOrderGate);

struct TypeCheck
{
  bool value = false;
  std::vector<std::string> evidence;
};

TypeCheck quaternionic_type(VaProfile const &profile);

/// Verified system of imprimitivity.
struct BlockSummary
{
  Primitivity verdict = Primitivity::unknown;
  std::size_t blocks = 0;
  std::size_t block_dimension = 0;
  /// Re-checked: each generator permutes the blocks and they span V directly.
  bool verified = false;
  std::vector<std::string> rows;
};

BlockSummary block_summary(VaProfile const &profile, std::size_t order_gate = kDefaultOrderGate);

struct ClassificationReport
{
  BlockSummary blocks;
  /// "C_p in dimension p-1", "Q16 in dimension 4" or empty.
  std::string classified_case;
  bool consistent = false;
  std::string evidence;
};

/// Checks primitive => classified for a faithful Q_p-irreducible p-group
/// profile. Throws std::invalid_argument when those hypotheses fail.
ClassificationReport lgm_oracle(VaProfile const &profile, std::size_t order_gate = kDefaultOrderGate);

/// Sufficient conditions for G to be hereditarily just infinite, checked on
/// a finite-index sub-profile H (same lattice, Q_H <= Q_G).
Verdict respthm_check(VaProfile const &g, VaProfile const &h, std::size_t order_gate = kDefaultOrderGate);

/// Restriction of a profile to a subgroup of Q.
VaProfile restrict_profile(VaProfile const &profile, PermGroup const &sub);

struct QuaternionicExample
{
  PermGroup q16;
  NumberRing ring;
  /// Order Z[z] + Z[z] y, z^4 = -1, y^2 = -1, y z = z^-1 y, by left multiplication.
  MatRep integral;
  IrreducibilityVerdict over_q;
  std::vector<PadicConstituent> constituents;
  VaProfile profile;
};

QuaternionicExample build_quaternionic_example(long precision = kDefaultPrecision);

struct ExtraspecialExample
{
  PermGroup e;
  std::vector<std::size_t> character_degrees;
  std::size_t min_faithful_degree = 0;
  /// Minimal faithful degree of 2.Alt(8), quoted from the ATLAS, not computed.
  static constexpr std::size_t kCitedDoubleCoverAlt8Degree = 8;
};

ExtraspecialExample build_extraspecial_example();

struct ExampleBundle
{
  int id = 0;
  std::optional<AffineShadowExample> one;
  std::optional<QuaternionicExample> two;
  std::optional<ExtraspecialExample> three;
};

/// Throws std::invalid_argument for id outside {1, 2, 3}.
ExampleBundle paper_examples(int id, long precision = kDefaultPrecision);

/// Faithful representations of small 2-groups used for the classification
/// check over Z_2: C2, C4, C8, D8, Q8, SD16.
std::vector<VaProfile> two_group_corpus();

} // namespace jinf

#endif
