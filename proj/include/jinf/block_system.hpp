#ifndef JINF_BLOCK_SYSTEM_HPP
#define JINF_BLOCK_SYSTEM_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jinf/finite_group.hpp"
#include "jinf/rep.hpp"

namespace jinf {

enum class Primitivity
{
  imprimitive,
  primitive,
  unknown
};

inline std::string to_string(Primitivity p)
{
  switch (p) {
  case Primitivity::imprimitive: return "imprimitive";
  case Primitivity::primitive: return "primitive";
  case Primitivity::unknown: return "unknown";
  }
  return "unknown";
}

/// Outcome of an irreducibility analysis used by the block search.
template <class T>
struct RestrictionCheck
{
  /// 0 reducible, 1 irreducible, 2 unknown.
  int status = 2;
  std::vector<std::vector<T>> witness;
  std::string evidence;
};

/// One maximal subgroup class inspected by the search.
struct BlockRow
{
  std::string subgroup;
  std::size_t index = 0;
  bool excluded = false;
  std::string analysis;
};

template <class T>
struct BlockSystemResult
{
  Primitivity verdict = Primitivity::unknown;
  /// imprimitive: the blocks W_1, ..., W_m as echelon bases.
  std::vector<std::vector<std::vector<T>>> blocks;
  /// imprimitive: generator index -> block permutation.
  std::vector<std::vector<std::size_t>> generator_action;
  std::vector<BlockRow> rows;
};

namespace detail {

template <class T>
bool same_subspace(std::vector<std::vector<T>> const &a, std::vector<std::vector<T>> const &b)
{
  if (a.size() != b.size())
    return false;
  for (auto const &v : a)
    if (!coordinates(b, v))
      return false;
  return true;
}

template <class T>
std::vector<std::vector<T>> image_subspace(Matrix<T> const &m, std::vector<std::vector<T>> const &w, std::size_t d)
{
  std::vector<std::vector<T>> out;
  for (auto const &v : w)
    out.push_back(m * v);
  return span_basis(out, d, w.front().front());
}

// The translates of w under the group when they form a system of
// imprimitivity with exactly m blocks.
template <class T>
std::optional<std::vector<std::vector<std::vector<T>>>> translate_system(MatRepT<T> const &rep,
                                                                         std::vector<std::vector<T>> const &w,
                                                                         std::size_t m)
{
  std::vector<std::vector<std::vector<T>>> blocks{w};
  for (auto const &img : rep.element_images) {
    auto tw = image_subspace(img, w, rep.dimension);
    bool seen = false;
    for (auto const &b : blocks)
      if (same_subspace(b, tw)) {
        seen = true;
        break;
      }
    if (!seen) {
      blocks.push_back(tw);
      if (blocks.size() > m)
        return std::nullopt;
    }
  }
  if (blocks.size() != m)
    return std::nullopt;
  std::vector<std::vector<T>> all;
  for (auto const &b : blocks)
    all.insert(all.end(), b.begin(), b.end());
  if (span_basis(all, rep.dimension, w.front().front()).size() != rep.dimension)
    return std::nullopt;
  return blocks;
}

} // namespace detail

/// Searches for a system of imprimitivity. Every system coarsens to one whose
/// block stabilizer is maximal, so each maximal subgroup class M of index m
/// dividing the dimension is examined for an M-invariant subspace of
/// dimension d/m whose translates form a direct sum. A class is excluded
/// when m does not divide d or the restriction to M is irreducible; the
/// representation is certified primitive when every class is excluded.
/// Throws std::invalid_argument when analyse reports the representation
/// itself reducible.
template <class T>
BlockSystemResult<T> matrix_block_system(MatRepT<T> const &rep,
                                         std::function<RestrictionCheck<T>(MatRepT<T> const &)> const &analyse,
                                         std::size_t order_gate = kDefaultOrderGate)
{
  std::size_t d = rep.dimension;
  if (analyse(rep).status == 0)
    throw std::invalid_argument("block system search needs an irreducible representation");
  BlockSystemResult<T> res;
  T like = rep.images.front()(0, 0);
  T zero = ScalarTraits<T>::zero_like(like);
  T one = ScalarTraits<T>::one_like(like);
  bool all_excluded = true;
  for (auto const &mx : maximal_subgroups(rep.group, order_gate)) {
    BlockRow row;
    row.subgroup = "order " + mx.order().str();
    Integer idx = rep.group.order() / mx.order();
    row.index = static_cast<std::size_t>(idx);
    if (d % row.index != 0) {
      row.excluded = true;
      row.analysis = "index does not divide the dimension";
      res.rows.push_back(row);
      continue;
    }
    std::size_t bd = d / row.index;
    auto sub = restrict_rep(rep, mx);
    auto check = analyse(sub);
    if (check.status == 1) {
      row.excluded = true;
      row.analysis = "restriction irreducible: " + check.evidence;
      res.rows.push_back(row);
      continue;
    }
    std::vector<std::vector<T>> seeds;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<T> e(d, zero);
      e[i] = one;
      seeds.push_back(e);
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        std::vector<T> e(d, zero);
        e[i] = one;
        e[j] = one;
        seeds.push_back(e);
      }
    seeds.insert(seeds.end(), check.witness.begin(), check.witness.end());
    std::vector<std::vector<std::vector<T>>> candidates;
    if (check.witness.size() == bd)
      candidates.push_back(span_basis(check.witness, d, like));
    for (auto const &s : seeds) {
      auto w = spin(sub, s);
      if (w.size() == bd)
        candidates.push_back(w);
    }
    for (auto const &w : candidates)
      if (auto blocks = detail::translate_system(rep, w, row.index)) {
        res.verdict = Primitivity::imprimitive;
        res.blocks = *blocks;
        for (auto const &g : rep.images) {
          std::vector<std::size_t> act;
          for (auto const &b : res.blocks) {
            auto tb = detail::image_subspace(g, b, d);
            std::size_t k = 0;
            while (k < res.blocks.size() && !detail::same_subspace(res.blocks[k], tb))
              ++k;
            if (k == res.blocks.size())
              throw std::logic_error("block translate is not a block");
            act.push_back(k);
          }
          res.generator_action.push_back(act);
        }
        row.analysis = "blocks are the translates of an invariant subspace of the restriction";
        res.rows.push_back(row);
        return res;
      }
    all_excluded = false;
    row.analysis = "restriction " + std::string(check.status == 0 ? "reducible" : "undecided") +
                   ", no translate decomposition found among the spun subspaces";
    res.rows.push_back(row);
  }
  res.verdict = all_excluded ? Primitivity::primitive : Primitivity::unknown;
  return res;
}

} // namespace jinf

#endif
