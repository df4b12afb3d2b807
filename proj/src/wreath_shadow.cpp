#include "jinf/wreath_shadow.hpp"

#include <stdexcept>

#include "jinf/finite_group.hpp"

namespace jinf {

PermGroup simple_factor(std::string const &tag)
{
  if (tag == "A5")
    return groups::alternating(5);
  if (tag == "PSL(2,7)")
    return groups::gl32_on_points();
  throw std::invalid_argument("unsupported simple factor '" + tag + "' (use A5 or PSL(2,7))");
}

WreathShadow make_wreath_shadow(std::string const &factor_tag, PermGroup const &top)
{
  WreathShadow s;
  s.factor_tag = factor_tag;
  s.factor = simple_factor(factor_tag);
  s.top = top;
  s.wreath = groups::wreath_product(s.factor, top);
  s.model = wreath_shadow_model(s.wreath, top);
  return s;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e)
{
  std::size_t r = 1;
  while (e--)
    r *= b;
  return r;
}

std::vector<std::size_t> digits(std::size_t x, std::size_t p)
{
  std::vector<std::size_t> d(p);
  for (std::size_t i = 0; i < p; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

std::size_t undigits(std::vector<std::size_t> const &d, std::size_t p)
{
  std::size_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    x = x * p + d[i];
  return x;
}

Perm translation(std::size_t p, std::size_t coord)
{
  std::size_t n = ipow(p, p);
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto d = digits(x, p);
    d[coord] = (d[coord] + 1) % p;
    img[x] = static_cast<Point>(undigits(d, p));
  }
  return Perm(std::move(img));
}

Perm coordinate_shift(std::size_t p)
{
  std::size_t n = ipow(p, p);
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto d = digits(x, p);
    std::vector<std::size_t> e(p);
    for (std::size_t i = 0; i < p; ++i)
      e[(i + 1) % p] = d[i];
    img[x] = static_cast<Point>(undigits(e, p));
  }
  return Perm(std::move(img));
}

void check_prime(std::size_t p)
{
  if (p != 2 && p != 3)
    throw std::invalid_argument("affine shadows are supported for p = 2 and p = 3 only");
}

} // namespace

PermGroup cyclic_affine_group(std::size_t p)
{
  check_prime(p);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < p; ++i)
    gens.push_back(translation(p, i));
  gens.push_back(coordinate_shift(p));
  return PermGroup(ipow(p, p), gens);
}

PermGroup translation_subgroup(std::size_t p)
{
  check_prime(p);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < p; ++i)
    gens.push_back(translation(p, i));
  return PermGroup(ipow(p, p), gens);
}

PermGroup coordinate_hyperplane(std::size_t p)
{
  check_prime(p);
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < p; ++i)
    gens.push_back(translation(p, i));
  return PermGroup(ipow(p, p), gens);
}

AffineShadowExample build_wreath_shadow(std::string const &factor_tag, std::size_t p)
{
  check_prime(p);
  AffineShadowExample ex;
  ex.p = p;
  ex.shadow = make_wreath_shadow(factor_tag, cyclic_affine_group(p));
  auto const &q = *ex.shadow.model.quotient;
  ex.h = q.preimage(coordinate_hyperplane(p));
  ex.m = q.preimage(translation_subgroup(p));
  Integer expected = 1;
  for (std::size_t i = 0; i < ipow(p, p); ++i)
    expected *= ex.shadow.factor.order();
  expected *= ipow(p, p + 1);
  if (ex.shadow.wreath.group.order() != expected)
    throw std::logic_error("shadow order self-check failed");
  return ex;
}

WreathVerdicts wreath_verdicts(AffineShadowExample const &ex)
{
  auto const &model = ex.shadow.model;
  WreathVerdicts v;
  v.g = shadow_ji_verdict(model, model.group);
  v.h = shadow_ji_verdict(model, ex.h);
  v.m = shadow_ji_verdict(model, ex.m);
  v.h_index = model.group.order() / ex.h.order();
  auto maximals = maximal_subgroups_containing(model, ex.h);
  v.maximals_over_h = maximals.size();
  v.m_is_unique_maximal_over_h = maximals.size() == 1 && maximals.front().same_group(ex.m);
  v.w_normal_in_top = coordinate_hyperplane(ex.p).is_normal_in(ex.shadow.top);
  return v;
}

std::vector<groups::NamedGroup> shadow_top_corpus()
{
  return {
      {"D8", groups::dihedral(4)},
      {"A4", groups::alternating(4)},
      {"S4", groups::symmetric(4)},
  };
}

} // namespace jinf
