#include "jinf/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jinf {

Perm::Perm(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree)
        throw std::invalid_argument("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Perm Perm::operator*(Perm const &rhs) const
{
  if (rhs.degree() != degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = rhs.images_[images_[i]];
  return result;
}

Perm Perm::conjugated_by(Perm const &g) const
{
  // x^(g^-1 h g): send g(x) to g(h(x))
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[g.images_[i]] = g.images_[images_[i]];
  return result;
}

Perm Perm::pow(long long e) const
{
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Perm result(degree());
  while (n) {
    if (n & 1)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::uint64_t Perm::order() const
{
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::extended(std::size_t new_degree) const
{
  if (new_degree < degree())
    throw std::invalid_argument("cannot shrink a permutation");
  Perm result(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = images_[i];
  return result;
}

std::size_t Perm::hash() const
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : images_) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Perm::cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Perm const &p)
{
  return os << p.cycle_string();
}

} // namespace jinf
