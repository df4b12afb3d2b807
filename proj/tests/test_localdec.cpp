#include "doctest.h"

#include <random>
#include <set>

#include "jinf/groups.hpp"
#include "jinf/localdec.hpp"

using namespace jinf;

namespace {

RatMat M(std::vector<std::vector<long>> rows)
{
  std::vector<RatVec> r;
  for (auto const &row : rows) {
    RatVec v;
    for (long x : row)
      v.emplace_back(x);
    r.push_back(v);
  }
  return RatMat::from_rows(r);
}

MatRep rep_of(PermGroup const &g, std::vector<RatMat> const &mats)
{
  return rep_from_data(g.degree(), g.generators(), mats);
}

MatRep c3_companion() { return rep_of(groups::cyclic(3), {M({{0, -1}, {1, -1}})}); }

MatRep q8_quaternion()
{
  auto li = M({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  auto lj = M({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  return rep_of(groups::generalized_quaternion(8), {li, lj});
}

// Left multiplication on Q(z) + Q(z) y, z^4 = -1, y^2 = -1, y z = z^-1 y,
// basis z^0..z^3, z^0 y..z^3 y, written out entry by entry.
MatRep q16_by_hand()
{
  RatMat z(8, 8, Rational(0)), y(8, 8, Rational(0));
  for (int half = 0; half < 2; ++half)
    for (int k = 0; k < 4; ++k) {
      int src = 4 * half + k;
      if (k < 3)
        z(4 * half + k + 1, src) = 1;
      else
        z(4 * half, src) = -1;
    }
  // y z^k = z^-k y ; y z^k y = -z^-k
  int neg_index[4] = {0, 3, 2, 1};
  int neg_sign[4] = {1, -1, -1, -1};
  for (int k = 0; k < 4; ++k) {
    y(4 + neg_index[k], k) = neg_sign[k];
    y(neg_index[k], 4 + k) = -neg_sign[k];
  }
  return rep_of(groups::generalized_quaternion(16), {z, y});
}

// Trial division by every monic polynomial over F_p, smallest degree first.
std::size_t brute_fp_factor_count(std::vector<long> f, long p)
{
  for (auto &c : f)
    c = ((c % p) + p) % p;
  std::size_t count = 0;
  for (long d = 1; d < static_cast<long>(f.size()); ++d) {
    long total = 1;
    for (long i = 0; i < d; ++i)
      total *= p;
    for (long code = 0; code < total; ++code) {
      std::vector<long> g(d + 1, 0);
      g[d] = 1;
      long c = code;
      for (long i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      while (static_cast<long>(f.size()) > d) {
        std::vector<long> r = f, q(f.size() - d, 0);
        for (long k = static_cast<long>(r.size()) - 1; k >= d; --k) {
          long lead = r[k];
          q[k - d] = lead;
          for (long i = 0; i <= d; ++i)
            r[k - d + i] = ((r[k - d + i] - lead * g[i]) % p + p) % p;
        }
        bool divides = true;
        for (long i = 0; i < d; ++i)
          divides = divides && r[i] == 0;
        if (!divides)
          break;
        f = q;
        ++count;
      }
    }
  }
  return count;
}

} // namespace

TEST_CASE("factor counts over Q_p")
{
  auto phi3 = from_integers({1, 1, 1});
  auto r3 = qp_factor_count(phi3, 3);
  CHECK(r3.method == QpMethod::eisenstein_shift);
  CHECK(r3.factor_count == 1u);
  auto r7 = qp_factor_count(phi3, 7);
  CHECK(r7.method == QpMethod::squarefree_hensel);
  CHECK(r7.factor_count == 2u);
  CHECK(qp_factor_count(from_integers({-1, 0, 1}), 3).factor_count == 2u);
  CHECK(qp_factor_count(from_integers({1, 0, 0, 0, 1}), 2).factor_count == 1u);
  CHECK(qp_factor_count(from_integers({-2, 0, 1}), 2).factor_count == 1u);
  CHECK(qp_factor_count(from_integers({1, 0, 1}), 5).factor_count == 2u);
  // x^2 - 17 splits over Q_2, but none of the three methods certifies it
  auto r17 = qp_factor_count(from_integers({-17, 0, 1}), 2);
  CHECK(r17.method == QpMethod::newton_polygon_bound);
  CHECK_FALSE(r17.factor_count);
  auto seg = qp_factor_count(from_integers({8, 2, 1}), 2);
  CHECK(seg.method == QpMethod::newton_polygon_bound);
  CHECK(seg.lower_bound == 2);
  CHECK_THROWS_AS(qp_factor_count(from_integers({1, 2, 1}), 3), std::invalid_argument);
}

TEST_CASE("squarefree Hensel counts agree with trial division mod p")
{
  std::mt19937 rng(5);
  for (long p : {2L, 3L, 5L})
    for (int t = 0; t < 1500; ++t) {
      std::size_t deg = 1 + rng() % 4;
      std::vector<long> c(deg + 1);
      for (auto &x : c)
        x = static_cast<long>(rng() % 19) - 9;
      c[deg] = 1;
      QPoly f = from_integers(c);
      if (!is_squarefree(f))
        continue;
      auto r = qp_factor_count(f, p);
      if (r.method != QpMethod::squarefree_hensel || f.front() == 0)
        continue;
      INFO(poly_to_string(f) << " p=" << p);
      CHECK(*r.factor_count == brute_fp_factor_count(c, p));
    }
}

TEST_CASE("irreducibility over Q_p of rational reps")
{
  auto c3 = c3_companion();
  CHECK(irreducible_over_Qp(c3, 3).status == Decision::irreducible);
  auto v7 = irreducible_over_Qp(c3, 7);
  REQUIRE(v7.status == Decision::reducible);
  CHECK(v7.witness.size() == 1);
  auto q8 = q8_quaternion();
  CHECK(irreducible_over_Qp(q8, 2).status == Decision::irreducible);
  auto q3 = irreducible_over_Qp(q8, 3);
  REQUIRE(q3.status == Decision::reducible);
  CHECK(q3.witness.size() == 2);
  auto diag = rep_of(groups::cyclic(2), {M({{1, 0}, {0, -1}})});
  CHECK(irreducible_over_Qp(diag, 5).status == Decision::reducible);
}

TEST_CASE("precision doubling never contradicts a definite verdict")
{
  std::vector<MatRep> reps{c3_companion(), q8_quaternion(), q16_by_hand()};
  for (auto const &r : reps)
    for (long p : {2L, 3L, 7L}) {
      auto a = irreducible_over_Qp(r, p, 32);
      auto b = irreducible_over_Qp(r, p, 64);
      if (a.status != Decision::unknown && b.status != Decision::unknown) {
        CHECK(a.status == b.status);
        CHECK(a.witness.size() == b.witness.size());
      }
    }
}

TEST_CASE("splitting into integral constituents")
{
  auto diag = rep_of(groups::cyclic(2), {M({{1, 0}, {0, -1}})});
  auto parts = padic_split(diag, 3, 32);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].rep.dimension == 1);
  CHECK(parts[1].rep.dimension == 1);

  auto c3 = padic_split(c3_companion(), 7, 32);
  REQUIRE(c3.size() == 2);
  std::set<Integer> eig;
  for (auto const &c : c3) {
    REQUIRE(c.rep.dimension == 1);
    eig.insert(c.rep.images[0](0, 0).residue(1));
  }
  CHECK(eig == std::set<Integer>{2, 4});

  CHECK_THROWS_AS(padic_split(c3_companion(), 3, 32), std::invalid_argument);
}

TEST_CASE("Q16 integral rep splits over Q_2 into two faithful 4-dim constituents")
{
  auto q16 = q16_by_hand();
  CHECK(q16.faithful);
  CHECK(commutant_basis(q16).size() == 8);
  auto overQ = irreducible_over_Q(q16);
  CHECK(overQ.status == Decision::irreducible);
  CHECK(overQ.structure.kind == AlgebraKind::cyclic_algebra);
  CHECK(overQ.structure.certified);
  auto v = irreducible_over_Qp(q16, 2);
  REQUIRE(v.status == Decision::reducible);
  CHECK(v.witness.size() == 4);
  auto parts = padic_split(q16, 2, 64);
  REQUIRE(parts.size() == 2);
  for (auto const &c : parts) {
    CHECK(c.rep.dimension == 4);
    CHECK(c.rep.faithful);
    for (auto const &m : c.rep.images) {
      CHECK(min_valuation(m) >= 0);
      CHECK(determinant(m).valuation() == 0);
    }
    CHECK(c.precision >= 32);
    auto w = irreducible_over_Qp(c.rep);
    CHECK(w.status == Decision::irreducible);
  }
}
