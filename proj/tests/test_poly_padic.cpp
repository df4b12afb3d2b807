#include "doctest.h"

#include <map>
#include <random>

#include "jinf/padic.hpp"
#include "jinf/poly.hpp"

using namespace jinf;

namespace {

QPoly P(std::vector<long> c) { return from_integers(c); }

// Brute force over F_p: count irreducible factors (with multiplicity) by
// trial division with every monic polynomial of degree >= 1, smallest first.
std::size_t brute_factor_count(FpPoly f, std::int64_t p)
{
  std::size_t count = 0;
  for (std::size_t d = 1; d + 1 <= f.size() - 1 + 1 && f.size() > 1; ++d) {
    // enumerate monic polys of degree d
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
      total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total && f.size() > 1; ++code) {
      FpPoly g(d + 1, 0);
      g[d] = 1;
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::int64_t>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      while (f.size() > 1) {
        auto [q, r] = fp_divmod(f, g, p);
        if (!r.empty())
          break;
        f = q;
        ++count;
      }
    }
  }
  return count;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
  auto f = P({-1, 0, 1});
  auto [q, r] = divmod(f, P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.empty());
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  auto b = extended_gcd(P({1, 0, 1}), P({-1, 1}));
  CHECK(b.g == P({1}));
  CHECK(b.s * P({1, 0, 1}) + b.t * P({-1, 1}) == P({1}));
  CHECK(shifted(P({1, 1, 1}), 1) == P({3, 3, 1}));
  CHECK(poly_to_string(P({3, 0, -2, 1})) == "x^3 - 2*x^2 + 3");
  CHECK(is_squarefree(P({-1, 0, 1})));
  CHECK_FALSE(is_squarefree(P({1, 2, 1})));
}

TEST_CASE("factorisation over Q recovers planted irreducibles")
{
  std::vector<QPoly> irr{P({1, 0, 1}), P({-2, 0, 1}), P({1, 1, 1}), P({-3, 1}), P({-2, 0, 0, 1}),
                         P({1, 0, 0, 0, 1}), P({1, 1, 1, 1, 1}), P({1, 0, -10, 0, 1}), P({2, 1})};
  for (auto const &f : irr)
    CHECK(is_irreducible_over_Q(f));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<std::size_t, int> want;
    QPoly prod{1};
    int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      std::size_t i = rng() % irr.size();
      ++want[i];
      prod = prod * irr[i];
    }
    prod = scaled(prod, Rational(3, 2));
    auto got = factor_over_Q(prod);
    std::map<std::size_t, int> seen;
    for (auto const &[g, m] : got) {
      bool matched = false;
      for (std::size_t i = 0; i < irr.size(); ++i)
        if (monic(irr[i]) == g) {
          seen[i] += m;
          matched = true;
        }
      CHECK(matched);
    }
    CHECK(seen == want);
  }
  CHECK(factor_over_Q(P({-1, 0, 0, 0, 0, 0, 0, 0, 1})).size() == 4);
}

TEST_CASE("Berlekamp factor counts agree with trial division")
{
  for (std::int64_t p : {2, 3, 5})
    for (std::size_t d = 1; d <= 4; ++d) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < d; ++i)
        total *= static_cast<std::size_t>(p);
      for (std::size_t code = 0; code < total; ++code) {
        FpPoly f(d + 1, 0);
        f[d] = 1;
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
          f[i] = static_cast<std::int64_t>(c % static_cast<std::size_t>(p));
          c /= static_cast<std::size_t>(p);
        }
        if (!fp_is_squarefree(f, p))
          continue;
        CHECK(fp_factor_count(f, p) == brute_factor_count(f, p));
        auto fs = fp_factor_squarefree(f, p);
        CHECK(fs.size() == fp_factor_count(f, p));
        FpPoly prod{1};
        for (auto const &g : fs)
          prod = fp_mul(prod, g, p);
        CHECK(prod == f);
      }
    }
}

TEST_CASE("matrix polynomials")
{
  auto m = RatMat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CHECK(minimal_polynomial(m) == P({2, -3, 1}));
  CHECK(characteristic_polynomial(m) == P({-2, 5, -4, 1}));
  auto c = RatMat::from_rows({{0, -1}, {1, -1}});
  CHECK(minimal_polynomial(c) == P({1, 1, 1}));
  CHECK(evaluate(P({1, 1, 1}), c).is_zero());
}

TEST_CASE("p-adic arithmetic tracks rationals")
{
  std::mt19937 rng(11);
  for (long p : {2L, 3L, 5L})
    for (int t = 0; t < 60; ++t) {
      Rational a(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 40));
      Rational b(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 40));
      long n = 20;
      Padic pa(a, p, n), pb(b, p, n);
      CHECK((pa + pb - Padic(a + b, p, n)).is_zero());
      CHECK((pa * pb - Padic(a * b, p, n)).is_zero());
      if (b != 0) {
        auto q = pa / pb;
        CHECK((q - Padic(a / b, p, n)).is_zero());
        CHECK(q.relative_precision() <= std::min(pa.relative_precision(), pb.relative_precision()));
      }
    }
  Padic x(Rational(12), 2, 10);
  CHECK(x.valuation() == 2);
  CHECK(x.residue() == 12);
  Padic y = x * Padic(Rational(4), 2, 10);
  CHECK(y.valuation() == 4);
  CHECK(y.precision() == 12);
  CHECK((Padic(Rational(1, 3), 2, 8) * Padic(Rational(3), 2, 8)).residue() == 1);
}

TEST_CASE("p-adic squares and square roots")
{
  CHECK(Padic(Rational(-7), 2, 30).is_square());
  CHECK(Padic(Rational(17), 2, 30).is_square());
  CHECK_FALSE(Padic(Rational(3), 2, 30).is_square());
  CHECK_FALSE(Padic(Rational(2), 2, 30).is_square());
  CHECK(Padic(Rational(7), 3, 30).is_square());
  CHECK_FALSE(Padic(Rational(2), 3, 30).is_square());
  CHECK(Padic(Rational(-4, 9), 5, 30).is_square());
  for (auto [q, p] : std::vector<std::pair<long, long>>{{-7, 2}, {17, 2}, {7, 3}, {-1, 5}, {44, 5}, {-28, 2}}) {
    Padic x(Rational(q), p, 40);
    Padic r = x.sqrt();
    CHECK((r * r - x).is_zero());
    CHECK(r.relative_precision() >= x.relative_precision() - 1);
  }
  CHECK_THROWS_AS(Padic(Rational(0), 2, 10).is_square(), PrecisionExhausted);
}
