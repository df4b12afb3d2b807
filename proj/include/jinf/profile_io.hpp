#ifndef JINF_PROFILE_IO_HPP
#define JINF_PROFILE_IO_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jinf/decide.hpp"

namespace jinf {

/// Parse failure located at a line (1-based, 0 for end of input) and field.
class ProfileError : public std::runtime_error
{
public:
  ProfileError(std::size_t line, std::string field, std::string const &what);
  std::size_t line() const { return line_; }
  std::string const &field() const { return field_; }

private:
  std::size_t line_;
  std::string field_;
};

inline constexpr int kProfileFormatVersion = 1;

enum class ProfileKind
{
  va,
  matrep,
  permgroup,
  wreath
};

std::string to_string(ProfileKind k);

enum class MatrixForm
{
  rational,
  padic,
  number_ring
};

struct MatrixBlock
{
  MatrixForm form = MatrixForm::rational;
  RatMat rational;
  /// padic: residues modulo p^precision.
  std::vector<std::vector<Integer>> residues;
  /// number_ring: entries of Q[t]/(modulus), expanded blockwise.
  std::vector<std::vector<QPoly>> ring_entries;
};

/// Line-based text format:
///   jinf-profile 1
///   kind va|matrep|permgroup|wreath
///   name <text>            optional
///   ring Q|Z|Z<p>          va, matrep
///   precision <N>          optional; required with padic matrices
///   modulus <c0> ... <cn>  optional; required with ring matrices
///   factor <tag>           wreath
///   degree <n>
///   gen <image of 0> ... <image of n-1>     one line per generator
///   matrix | padic-matrix | ring-matrix     one block per generator,
///   followed by its rows; ring entries are comma-separated coefficients.
/// Lines starting with '#' and blank lines are ignored.
struct ProfileFile
{
  int version = kProfileFormatVersion;
  ProfileKind kind = ProfileKind::va;
  std::string name;
  /// 0 for Z, -1 for Q, else the prime of Z_p.
  long ring = 0;
  std::optional<long> precision;
  std::optional<QPoly> modulus;
  std::string factor;
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> generators;
  std::vector<MatrixBlock> matrices;
};

ProfileFile parse_profile(std::string const &text);
/// Canonical form: fixed field order, no comments, single spaces.
std::string emit_profile(ProfileFile const &file);

std::vector<Perm> file_generators(ProfileFile const &file);
PermGroup file_group(ProfileFile const &file);
/// Builds the profile, checking relations. Throws ProfileError on
/// inconsistent matrix data.
VaProfile file_va_profile(ProfileFile const &file, std::size_t order_gate = kDefaultOrderGate);
WreathShadow file_wreath(ProfileFile const &file);

ProfileFile profile_file(VaProfile const &profile);
ProfileFile permgroup_file(PermGroup const &g, std::string name = {});

} // namespace jinf

#endif
