#ifndef JINF_REP_HPP
#define JINF_REP_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jinf/matrix.hpp"
#include "jinf/perm_group.hpp"

namespace jinf {

/// The assignment of matrices to generators does not extend to a homomorphism.
class RelationViolation : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix representation of a finite permutation group acting on column
/// vectors. Convention: the permutation product a*b (a first) maps to
/// image(b) * image(a).
template <class T>
struct MatRepT
{
  PermGroup group;
  /// Generators as given (identities included), aligned with images.
  std::vector<Perm> generators;
  std::vector<Matrix<T>> images;
  std::size_t dimension = 0;
  /// "Q", "Z" or "Zp" with the prime, informational.
  std::string ring = "Q";
  bool faithful = false;
  /// Every group element with its image, identity first.
  std::vector<Perm> elements;
  std::vector<Matrix<T>> element_images;

  Matrix<T> const &image_of(Perm const &g) const
  {
    auto it = index_.find(g);
    if (it == index_.end())
      throw std::invalid_argument("permutation is not in the represented group");
    return element_images[it->second];
  }

  std::map<Perm, std::size_t> index_;
};

using MatRep = MatRepT<Rational>;

namespace detail {

template <class T>
std::string word_text(std::vector<std::size_t> const &word)
{
  if (word.empty())
    return "identity";
  std::string s;
  for (auto w : word)
    s += (s.empty() ? "g" : "*g") + std::to_string(w);
  return s;
}

} // namespace detail

/// Builds the representation, enumerating the group together with matrix
/// images. Throws RelationViolation naming a word whose two evaluations
/// differ, std::invalid_argument for shape problems or singular images.
template <class T>
MatRepT<T> rep_from_data(std::size_t degree, std::vector<Perm> const &gens, std::vector<Matrix<T>> const &mats,
                         std::size_t order_gate = kDefaultOrderGate)
{
  if (gens.size() != mats.size())
    throw std::invalid_argument("one matrix per generator is required");
  if (mats.empty())
    throw std::invalid_argument("at least one generator is required");
  std::size_t d = mats.front().rows();
  for (auto const &m : mats) {
    if (!m.square() || m.rows() != d)
      throw std::invalid_argument("generator matrices must be square of equal dimension");
    if (ScalarTraits<T>::is_zero(determinant(m)))
      throw std::invalid_argument("generator matrix is not invertible");
  }
  MatRepT<T> rep;
  rep.group = PermGroup(degree, gens);
  if (rep.group.order() > order_gate)
    throw GateExceeded("order-gate", "represented group exceeds the order gate");
  rep.generators = gens;
  rep.images = mats;
  rep.dimension = d;
  T like = mats.front()(0, 0);
  std::vector<std::vector<std::size_t>> words{{}};
  rep.elements.push_back(Perm(degree));
  rep.element_images.push_back(Matrix<T>::identity(d, like));
  rep.index_[rep.elements.front()] = 0;
  for (std::size_t k = 0; k < rep.elements.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm x = rep.elements[k] * gens[s];
      Matrix<T> mx = mats[s] * rep.element_images[k];
      auto word = words[k];
      word.push_back(s);
      auto it = rep.index_.find(x);
      if (it == rep.index_.end()) {
        rep.index_[x] = rep.elements.size();
        rep.elements.push_back(x);
        rep.element_images.push_back(mx);
        words.push_back(word);
      } else if (!rep.element_images[it->second].equals(mx)) {
        throw RelationViolation("relation violated: " + detail::word_text<T>(word) + " and " +
                                detail::word_text<T>(words[it->second]) +
                                " are the same permutation but have different matrices");
      }
    }
  auto id = Matrix<T>::identity(d, like);
  rep.faithful = true;
  for (std::size_t k = 1; k < rep.elements.size(); ++k)
    if (rep.element_images[k].equals(id))
      rep.faithful = false;
  return rep;
}

/// Restriction to a subgroup (given by generators inside the represented group).
template <class T>
MatRepT<T> restrict_rep(MatRepT<T> const &rep, PermGroup const &sub)
{
  std::vector<Perm> gens = sub.generators();
  if (gens.empty())
    gens.push_back(Perm(rep.group.degree()));
  std::vector<Matrix<T>> mats;
  for (auto const &g : gens)
    mats.push_back(rep.image_of(g));
  auto r = rep_from_data(rep.group.degree(), gens, mats, static_cast<std::size_t>(rep.elements.size()));
  r.ring = rep.ring;
  return r;
}

/// Whether the span of the given vectors is mapped into itself by every generator.
template <class T>
bool is_invariant(MatRepT<T> const &rep, std::vector<std::vector<T>> const &basis)
{
  if (basis.empty())
    return true;
  for (auto const &m : rep.images)
    for (auto const &v : basis)
      if (!coordinates(basis, m * v))
        return false;
  return true;
}

/// The smallest invariant subspace containing v (echelon basis rows).
template <class T>
std::vector<std::vector<T>> spin(MatRepT<T> const &rep, std::vector<T> const &v)
{
  std::vector<std::vector<T>> vecs{v};
  std::vector<std::vector<T>> basis = span_basis(vecs, rep.dimension, v.front());
  for (std::size_t k = 0; k < vecs.size() && basis.size() < rep.dimension; ++k)
    for (auto const &m : rep.images) {
      auto w = m * vecs[k];
      if (!coordinates(basis, w)) {
        vecs.push_back(w);
        basis = span_basis(vecs, rep.dimension, v.front());
      }
    }
  return basis;
}

/// Basis of {X : X A = A X for every generator image A}, as matrices. Each
/// basis element has a 1 at its own free position and 0 at the others.
template <class T>
std::vector<Matrix<T>> commutant_basis(MatRepT<T> const &rep)
{
  std::size_t d = rep.dimension;
  T like = rep.images.front()(0, 0);
  T zero = ScalarTraits<T>::zero_like(like);
  Matrix<T> sys(rep.images.size() * d * d, d * d, zero);
  std::size_t row = 0;
  for (auto const &a : rep.images)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row) {
        // (X A - A X)_{ij} = sum_k X_ik A_kj - A_ik X_kj
        for (std::size_t k = 0; k < d; ++k) {
          sys(row, i * d + k) += a(k, j);
          sys(row, k * d + j) -= a(i, k);
        }
      }
  std::vector<Matrix<T>> out;
  for (auto const &v : kernel(sys)) {
    Matrix<T> x(d, d, zero);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        x(i, j) = v[i * d + j];
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace jinf

#endif
