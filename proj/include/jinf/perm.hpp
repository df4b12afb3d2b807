#ifndef JINF_PERM_HPP
#define JINF_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace jinf {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored as its image array.
///
/// Groups act on the right: (a * b) first applies a, then b, so that
/// x^(a*b) == (x^a)^b.
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs) { return *this = *this * rhs; }
  /// g^-1 * this * g
  Perm conjugated_by(Perm const &g) const;
  Perm pow(long long e) const;
  std::uint64_t order() const;

  /// Same permutation acting on more points (fixing the new ones).
  Perm extended(std::size_t degree) const;

  bool operator==(Perm const &rhs) const { return images_ == rhs.images_; }
  bool operator!=(Perm const &rhs) const { return images_ != rhs.images_; }
  bool operator<(Perm const &rhs) const { return images_ < rhs.images_; }

  std::size_t hash() const;
  std::string cycle_string() const;

private:
  std::vector<Point> images_;
};

std::ostream &operator<<(std::ostream &os, Perm const &p);

struct PermHash
{
  std::size_t operator()(Perm const &p) const { return p.hash(); }
};

} // namespace jinf

#endif
