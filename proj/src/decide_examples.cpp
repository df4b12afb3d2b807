#include <stdexcept>

#include "jinf/character_table.hpp"
#include "jinf/decide.hpp"

namespace jinf {

namespace {

RatMat from_ints(std::vector<std::vector<long>> const &rows)
{
  std::vector<RatVec> r;
  for (auto const &row : rows) {
    RatVec v;
    for (long x : row)
      v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return RatMat::from_rows(r);
}

// Multiplication by z on Z[z], z^4 = -1, power basis.
RatMat zeta8_companion()
{
  return from_ints({{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}

MatRep rep_on(PermGroup const &g, std::vector<RatMat> const &mats)
{
  return rep_from_data(g.degree(), g.generators(), mats);
}

} // namespace

QuaternionicExample build_quaternionic_example(long precision)
{
  QuaternionicExample ex;
  ex.q16 = groups::generalized_quaternion(16);
  if (ex.q16.order() != 16)
    throw std::logic_error("Q16 construction has the wrong order");
  ex.ring = NumberRing(from_integers({1, 0, 0, 0, 1}));
  QPoly z{Rational(0), Rational(1)}, zero{};
  RatMat mz = ex.ring.expand({{z, zero}, {zero, z}});
  // Galois conjugation z -> z^-1 = -z^3 on the power basis
  RatMat sigma(4, 4, Rational(0));
  for (std::size_t k = 0; k < 4; ++k) {
    QPoly image(8 - k + 1, Rational(0));
    image[(8 - k) % 8] = 1;
    auto r = ex.ring.reduce(image);
    for (std::size_t i = 0; i < r.size(); ++i)
      sigma(i, k) = r[i];
  }
  // y (a + b y) = -s(b) + s(a) y
  RatMat my(8, 8, Rational(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      my(i, 4 + j) = -sigma(i, j);
      my(4 + i, j) = sigma(i, j);
    }
  ex.integral = rep_on(ex.q16, {mz, my});
  ex.integral.ring = "Z";
  if (!ex.integral.faithful)
    throw std::logic_error("Q16 order representation is not faithful");
  ex.over_q = irreducible_over_Q(ex.integral);
  if (ex.over_q.status != Decision::irreducible || ex.over_q.probabilistic)
    throw std::logic_error("Q16 order representation is not certified irreducible over Q");
  ex.constituents = padic_split(ex.integral, 2, precision);
  if (ex.constituents.size() != 2 || ex.constituents[0].rep.dimension != 4 || ex.constituents[1].rep.dimension != 4)
    throw std::logic_error("Q16 representation does not split into two 4-dim constituents over Q2");
  ex.profile = make_profile(ex.constituents[0].rep, "Q16 constituent");
  return ex;
}

ExtraspecialExample build_extraspecial_example()
{
  ExtraspecialExample ex;
  ex.e = groups::extraspecial_central_d8_cube();
  if (ex.e.order() != 128)
    throw std::logic_error("extraspecial group has the wrong order");
  auto table = character_table(ex.e);
  ex.character_degrees = table.degrees;
  ex.min_faithful_degree = min_faithful_degree(table);
  return ex;
}

ExampleBundle paper_examples(int id, long precision)
{
  ExampleBundle out;
  out.id = id;
  switch (id) {
  case 1: out.one = build_wreath_shadow("A5", 2); break;
  case 2: out.two = build_quaternionic_example(precision); break;
  case 3: out.three = build_extraspecial_example(); break;
  default: throw std::invalid_argument("examples are numbered 1 to 3");
  }
  return out;
}

std::vector<VaProfile> two_group_corpus()
{
  RatMat c8 = zeta8_companion();
  RatMat rot = from_ints({{0, -1}, {1, 0}});
  RatMat qi = from_ints({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  RatMat qj = from_ints({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  // z -> z^3 on Z[z], z^4 = -1
  RatMat frob3 = from_ints({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}});
  std::vector<VaProfile> out;
  out.push_back(make_profile(rep_on(groups::cyclic(2), {from_ints({{-1}})}), 2, "C2"));
  out.push_back(make_profile(rep_on(groups::cyclic(4), {rot}), 2, "C4"));
  out.push_back(make_profile(rep_on(groups::cyclic(8), {c8}), 2, "C8"));
  out.push_back(make_profile(rep_on(groups::dihedral(4), {rot, from_ints({{1, 0}, {0, -1}})}), 2, "D8"));
  out.push_back(make_profile(rep_on(groups::generalized_quaternion(8), {qi, qj}), 2, "Q8"));
  out.push_back(make_profile(rep_on(groups::semidihedral(16), {c8, frob3}), 2, "SD16"));
  return out;
}

} // namespace jinf
