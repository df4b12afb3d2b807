#include "jinf/groups.hpp"

#include <numeric>
#include <stdexcept>

namespace jinf::groups {

PermGroup symmetric(std::size_t n)
{
  if (n <= 1)
    return PermGroup::trivial(1);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cycle}), Perm::from_cycles(n, {{0, 1}})});
}

PermGroup alternating(std::size_t n)
{
  if (n <= 2)
    return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k)
    gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return PermGroup(n, gens);
}

PermGroup cyclic(std::size_t n)
{
  if (n <= 1)
    return PermGroup::trivial(1);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cycle})});
}

PermGroup dihedral(std::size_t n)
{
  if (n < 3)
    throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(rot), Perm(refl)});
}

PermGroup klein_four()
{
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                       Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup regular_representation(std::size_t n,
                                 std::function<std::size_t(std::size_t, std::size_t)> const &mul,
                                 std::vector<std::size_t> const &gens)
{
  std::vector<Perm> perms;
  for (auto g : gens) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<Point>(mul(x, g));
    perms.emplace_back(std::move(img));
  }
  return PermGroup(n, perms);
}

namespace {

std::size_t check_two_power(std::size_t order, std::size_t min_order)
{
  if (order < min_order || (order & (order - 1)) != 0)
    throw std::invalid_argument("order must be a power of two >= " + std::to_string(min_order));
  return order / 2;
}

} // namespace

PermGroup generalized_quaternion(std::size_t order)
{
  std::size_t m = check_two_power(order, 8);
  auto mul = [m](std::size_t u, std::size_t v) {
    std::size_t a = u % m, b = u / m, c = v % m, d = v / m;
    std::size_t e = b ? (a + m - c) % m : (a + c) % m;
    if (b && d)
      e = (e + m / 2) % m;
    return e + m * (b ^ d);
  };
  return regular_representation(order, mul, {1, m});
}

PermGroup semidihedral(std::size_t order)
{
  std::size_t m = check_two_power(order, 16);
  auto mul = [m](std::size_t u, std::size_t v) {
    std::size_t a = u % m, b = u / m, c = v % m, d = v / m;
    std::size_t e = b ? (a + c * (m / 2 - 1)) % m : (a + c) % m;
    return e + m * (b ^ d);
  };
  return regular_representation(order, mul, {1, m});
}

PermGroup extraspecial_central_d8_cube()
{
  // (v, c) with v in F_2^6, c in F_2; (v,c)(w,d) = (v+w, c+d+beta(v,w)),
  // beta(v,w) = sum_i v_{2i} w_{2i+1}. Each pair e_{2i}, e_{2i+1} spans a D8.
  auto beta = [](std::size_t v, std::size_t w) {
    std::size_t s = 0;
    for (int i = 0; i < 3; ++i)
      s ^= ((v >> (2 * i)) & 1) & ((w >> (2 * i + 1)) & 1);
    return s;
  };
  auto mul = [beta](std::size_t u, std::size_t w) {
    std::size_t v1 = u % 64, c1 = u / 64, v2 = w % 64, c2 = w / 64;
    return (v1 ^ v2) + 64 * (c1 ^ c2 ^ beta(v1, v2));
  };
  return regular_representation(128, mul, {1, 2, 4, 8, 16, 32});
}

PermGroup projective_line_group(std::size_t q, bool general)
{
  if (!is_prime(static_cast<std::int64_t>(q)))
    throw std::invalid_argument("projective_line_group expects a prime");
  std::size_t inf = q;
  auto g = static_cast<std::size_t>(primitive_root(static_cast<std::int64_t>(q)));
  std::size_t mult = general ? g : (g * g) % q;
  std::vector<Point> shift(q + 1), scale(q + 1), invert(q + 1);
  for (std::size_t x = 0; x < q; ++x) {
    shift[x] = static_cast<Point>((x + 1) % q);
    scale[x] = static_cast<Point>((x * mult) % q);
    if (x == 0)
      invert[x] = static_cast<Point>(inf);
    else
      invert[x] = static_cast<Point>((q - static_cast<std::size_t>(mod_inv(static_cast<std::int64_t>(x), static_cast<std::int64_t>(q)))) % q);
  }
  shift[inf] = scale[inf] = static_cast<Point>(inf);
  invert[inf] = 0;
  return PermGroup(q + 1, {Perm(shift), Perm(scale), Perm(invert)});
}

namespace {

std::vector<Perm> gl32_transvections(bool include_zero)
{
  std::vector<Perm> gens;
  std::size_t offset = include_zero ? 0 : 1;
  std::size_t n = include_zero ? 8 : 7;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      std::vector<Point> img(n);
      for (std::size_t v = offset; v < 8; ++v) {
        std::size_t w = v ^ (((v >> i) & 1) << j);
        img[v - offset] = static_cast<Point>(w - offset);
      }
      gens.emplace_back(std::move(img));
    }
  return gens;
}

std::size_t f8_mul(std::size_t a, std::size_t b)
{
  std::size_t r = 0;
  for (int i = 0; i < 3; ++i)
    if ((b >> i) & 1)
      r ^= a << i;
  for (int i = 4; i >= 3; --i)
    if ((r >> i) & 1)
      r ^= 0b1011u << (i - 3);
  return r;
}

} // namespace

PermGroup gl32_on_points() { return PermGroup(7, gl32_transvections(false)); }

PermGroup agl32()
{
  auto gens = gl32_transvections(true);
  std::vector<Point> t(8);
  for (std::size_t v = 0; v < 8; ++v)
    t[v] = static_cast<Point>(v ^ 1);
  gens.emplace_back(t);
  return PermGroup(8, gens);
}

PermGroup affine_1d(std::size_t p, std::size_t multiplier_order)
{
  if (!is_prime(static_cast<std::int64_t>(p)) || (p - 1) % multiplier_order != 0)
    throw std::invalid_argument("affine_1d: bad parameters");
  auto g = primitive_root(static_cast<std::int64_t>(p));
  auto a = static_cast<std::size_t>(mod_pow(g, static_cast<std::int64_t>((p - 1) / multiplier_order), static_cast<std::int64_t>(p)));
  std::vector<Point> shift(p), scale(p);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>((x * a) % p);
  }
  return PermGroup(p, {Perm(shift), Perm(scale)});
}

PermGroup affine_f8(bool with_frobenius)
{
  std::vector<Point> shift(8), scale(8), frob(8);
  for (std::size_t x = 0; x < 8; ++x) {
    shift[x] = static_cast<Point>(x ^ 1);
    scale[x] = static_cast<Point>(f8_mul(x, 2));
    frob[x] = static_cast<Point>(f8_mul(x, x));
  }
  std::vector<Perm> gens{Perm(shift), Perm(scale)};
  if (with_frobenius)
    gens.emplace_back(frob);
  return PermGroup(8, gens);
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  std::size_t n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (auto const &g : a.generators())
    gens.push_back(g.extended(n));
  for (auto const &g : b.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t x = 0; x < b.degree(); ++x)
      img[a.degree() + x] = static_cast<Point>(a.degree() + g[static_cast<Point>(x)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, gens);
}

Perm Wreath::lift_top(Perm const &top) const
{
  std::vector<Point> img(block_size * blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t x = 0; x < block_size; ++x)
      img[b * block_size + x] = static_cast<Point>(top[static_cast<Point>(b)] * block_size + x);
  return Perm(std::move(img));
}

std::vector<Perm> Wreath::factor_generators(std::size_t b) const
{
  std::vector<Perm> result;
  for (auto const &g : factor_gens) {
    std::vector<Point> img(block_size * blocks);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t x = 0; x < block_size; ++x)
      img[b * block_size + x] = static_cast<Point>(b * block_size + g[static_cast<Point>(x)]);
    result.emplace_back(std::move(img));
  }
  return result;
}

Perm Wreath::project(Perm const &g) const
{
  std::vector<Point> img(blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    img[b] = static_cast<Point>(g[static_cast<Point>(b * block_size)] / block_size);
  return Perm(std::move(img));
}

Wreath wreath_product(PermGroup const &factor, PermGroup const &top)
{
  Wreath w;
  w.block_size = factor.degree();
  w.blocks = top.degree();
  w.factor_gens = factor.generators();
  std::vector<Perm> base_gens;
  for (std::size_t b = 0; b < w.blocks; ++b)
    for (auto &g : w.factor_generators(b))
      base_gens.push_back(std::move(g));
  std::size_t n = w.block_size * w.blocks;
  w.base = PermGroup(n, base_gens);
  std::vector<Perm> gens;
  for (auto const &orb : top.orbits())
    for (auto &g : w.factor_generators(orb.front()))
      gens.push_back(std::move(g));
  for (auto const &t : top.generators())
    gens.push_back(w.lift_top(t));
  w.group = PermGroup(n, gens);
  return w;
}

std::vector<NamedGroup> primitive_corpus()
{
  return {
      {"S2", cyclic(2)},
      {"C3", cyclic(3)},
      {"S3", symmetric(3)},
      {"A4", alternating(4)},
      {"S4", symmetric(4)},
      {"C5", cyclic(5)},
      {"D10", dihedral(5)},
      {"F20", affine_1d(5, 4)},
      {"A5", alternating(5)},
      {"S5", symmetric(5)},
      {"PSL(2,5)", projective_line_group(5, false)},
      {"PGL(2,5)", projective_line_group(5, true)},
      {"A6", alternating(6)},
      {"S6", symmetric(6)},
      {"C7", cyclic(7)},
      {"D14", dihedral(7)},
      {"F21", affine_1d(7, 3)},
      {"F42", affine_1d(7, 6)},
      {"PSL(3,2)", gl32_on_points()},
      {"A7", alternating(7)},
      {"AGL(1,8)", affine_f8(false)},
      {"AGammaL(1,8)", affine_f8(true)},
      {"AGL(3,2)", agl32()},
      {"PSL(2,7)", projective_line_group(7, false)},
      {"PGL(2,7)", projective_line_group(7, true)},
  };
}

} // namespace jinf::groups
