#include "jinf/character_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jinf {

// Cyclotomic arithmetic -----------------------------------------------------

std::vector<Integer> cyclotomic_polynomial(std::size_t n)
{
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    auto div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      Integer c = num[k];
      quot[k - dd] = c;
      for (std::size_t i = 0; i <= dd; ++i)
        num[k - dd + i] -= c * div[i];
    }
    num = std::move(quot);
  }
  return num;
}

CyclotomicValue reduce_cyclotomic(std::vector<Rational> coeffs, std::size_t n)
{
  auto phi = cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = coeffs.size(); k-- > deg;) {
    Rational c = coeffs[k];
    if (c == 0)
      continue;
    for (std::size_t i = 0; i <= deg; ++i)
      coeffs[k - deg + i] -= c * Rational(phi[i]);
  }
  coeffs.resize(deg, Rational(0));
  return coeffs;
}

std::string format_cyclotomic(CyclotomicValue const &v)
{
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0)
      continue;
    Rational c = v[k];
    bool negative = c < 0;
    if (negative)
      c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (mono.empty())
      out += to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += to_string(c) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

namespace {

CyclotomicValue cyclo_mul(CyclotomicValue const &a, CyclotomicValue const &b, std::size_t n)
{
  std::vector<Rational> prod(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] += a[i] * b[j];
  }
  return reduce_cyclotomic(std::move(prod), n);
}

// Arithmetic modulo a prime below 2^31 -------------------------------------

using u64 = std::uint64_t;
using ModMatrix = std::vector<std::vector<u64>>;

struct ModField
{
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 inv(u64 a) const
  {
    return static_cast<u64>(mod_inv(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)));
  }
  u64 pow(u64 a, u64 e) const
  {
    return static_cast<u64>(mod_pow(static_cast<std::int64_t>(a), static_cast<std::int64_t>(e),
                                    static_cast<std::int64_t>(p)));
  }
};

// Characteristic polynomial via reduction to Hessenberg form, constant term first.
std::vector<u64> charpoly(ModMatrix a, ModField const &f)
{
  std::size_t m = a.size();
  for (std::size_t k = 1; k + 1 < m; ++k) {
    std::size_t c = k - 1;
    std::size_t piv = k;
    while (piv < m && a[piv][c] == 0)
      ++piv;
    if (piv == m)
      continue;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (std::size_t r = 0; r < m; ++r)
        std::swap(a[r][piv], a[r][k]);
    }
    u64 pinv = f.inv(a[k][c]);
    for (std::size_t r = k + 1; r < m; ++r) {
      u64 u = f.mul(a[r][c], pinv);
      if (u == 0)
        continue;
      for (std::size_t s = 0; s < m; ++s)
        a[r][s] = f.sub(a[r][s], f.mul(u, a[k][s]));
      for (std::size_t s = 0; s < m; ++s)
        a[s][k] = f.add(a[s][k], f.mul(u, a[s][r]));
    }
  }
  std::vector<std::vector<u64>> p(m + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= m; ++k) {
    // (x - h_kk) p_{k-1}
    std::vector<u64> next(k + 1, 0);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      next[i + 1] = f.add(next[i + 1], p[k - 1][i]);
      next[i] = f.sub(next[i], f.mul(a[k - 1][k - 1], p[k - 1][i]));
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = f.mul(t, a[i][i - 1]);
      u64 coef = f.mul(t, a[i - 1][k - 1]);
      for (std::size_t s = 0; s < p[i - 1].size(); ++s)
        next[s] = f.sub(next[s], f.mul(coef, p[i - 1][s]));
    }
    p[k] = std::move(next);
  }
  return p[m];
}

// Basis of the null space of a (rows x cols), as column vectors.
std::vector<std::vector<u64>> null_space(ModMatrix a, ModField const &f)
{
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[r]);
    u64 inv = f.inv(a[r][c]);
    for (auto &x : a[r])
      x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      u64 u = a[i][c];
      for (std::size_t s = 0; s < cols; ++s)
        a[i][s] = f.sub(a[i][s], f.mul(u, a[r][s]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix R with B R = M B, for B of full column rank spanning an M-invariant space.
ModMatrix restrict_to(ModMatrix const &m, ModMatrix const &b, ModField const &f)
{
  std::size_t r = b.size(), k = b[0].size();
  ModMatrix aug(r, std::vector<u64>(2 * k, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      aug[i][c] = b[i][c];
      u64 s = 0;
      for (std::size_t t = 0; t < r; ++t)
        s = f.add(s, f.mul(m[i][t], b[t][c]));
      aug[i][k + c] = s;
    }
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < r && aug[piv][c] == 0)
      ++piv;
    if (piv == r)
      throw std::logic_error("subspace basis is rank deficient");
    std::swap(aug[piv], aug[row]);
    u64 inv = f.inv(aug[row][c]);
    for (auto &x : aug[row])
      x = f.mul(x, inv);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || aug[i][c] == 0)
        continue;
      u64 u = aug[i][c];
      for (std::size_t s = 0; s < 2 * k; ++s)
        aug[i][s] = f.sub(aug[i][s], f.mul(u, aug[row][s]));
    }
    ++row;
  }
  ModMatrix res(k, std::vector<u64>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c)
      res[i][c] = aug[i][k + c];
  return res;
}

std::int64_t dixon_prime(std::size_t order, std::size_t exponent)
{
  auto l = static_cast<std::int64_t>(2 * order + 1);
  while (l % static_cast<std::int64_t>(exponent) != 1 % static_cast<std::int64_t>(exponent) || !is_prime(l))
    ++l;
  return l;
}

} // namespace

// Character table -----------------------------------------------------------

std::vector<std::size_t> CharacterTable::kernel_classes(std::size_t i) const
{
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < values[i].size(); ++j)
    if (values[i][j] == values[i][0])
      out.push_back(j);
  return out;
}

CharacterTable character_table(FiniteGroup const &g)
{
  auto const &classes = g.classes();
  std::size_t r = classes.size();
  std::size_t n = g.order();
  std::size_t e = g.exponent();
  ModField f{static_cast<u64>(dixon_prime(n, e))};

  CharacterTable t;
  t.group_order = n;
  t.root_order = e;
  for (auto const &cls : classes) {
    t.class_representatives.push_back(g.element(cls.front()));
    t.class_sizes.push_back(cls.size());
    t.element_orders.push_back(g.element_order(cls.front()));
    t.inverse_class.push_back(g.class_of(g.inv(cls.front())));
  }

  // c[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
  std::vector<std::vector<std::vector<u64>>> coeff(r, ModMatrix(r, std::vector<u64>(r, 0)));
  for (std::size_t l = 0; l < r; ++l) {
    std::size_t z = classes[l].front();
    for (std::size_t x = 0; x < n; ++x)
      ++coeff[g.class_of(x)][g.class_of(g.mul(g.inv(x), z))][l];
  }
  for (auto &m : coeff)
    for (auto &row : m)
      for (auto &v : row)
        v %= f.p;

  // simultaneous eigenspaces of the class multiplication matrices
  ModMatrix id(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    id[i][i] = 1;
  std::vector<ModMatrix> spaces{id};
  for (std::size_t j = 1; j < r; ++j) {
    std::vector<ModMatrix> next;
    for (auto &b : spaces) {
      std::size_t k = b[0].size();
      if (k == 1) {
        next.push_back(std::move(b));
        continue;
      }
      ModMatrix res = restrict_to(coeff[j], b, f);
      auto cp = charpoly(res, f);
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < f.p && covered < k; ++lambda) {
        u64 v = 0;
        for (std::size_t i = cp.size(); i-- > 0;)
          v = f.add(f.mul(v, lambda), cp[i]);
        if (v != 0)
          continue;
        ModMatrix shifted = res;
        for (std::size_t i = 0; i < k; ++i)
          shifted[i][i] = f.sub(shifted[i][i], lambda);
        auto ker = null_space(shifted, f);
        ModMatrix nb(r, std::vector<u64>(ker.size(), 0));
        for (std::size_t row = 0; row < r; ++row)
          for (std::size_t c = 0; c < ker.size(); ++c) {
            u64 s = 0;
            for (std::size_t i = 0; i < k; ++i)
              s = f.add(s, f.mul(b[row][i], ker[c][i]));
            nb[row][c] = s;
          }
        covered += ker.size();
        next.push_back(std::move(nb));
      }
      if (covered != k)
        throw std::logic_error("class matrix is not diagonalizable modulo the Dixon prime");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw std::logic_error("central characters were not separated");

  // roots of unity modulo l
  u64 z = f.pow(static_cast<u64>(primitive_root(static_cast<std::int64_t>(f.p))), (f.p - 1) / e);
  // power maps: class of g_j^k
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t x = classes[j].front();
    std::size_t o = g.element_order(x);
    std::size_t y = 0;
    for (std::size_t k = 0; k < o; ++k, y = g.mul(y, x))
      power_class[j].push_back(g.class_of(y));
  }

  struct Row
  {
    std::size_t degree;
    std::vector<CyclotomicValue> values;
  };
  std::vector<Row> rows;
  for (auto const &b : spaces) {
    std::vector<u64> w(r);
    u64 w0inv = f.inv(b[0][0]);
    for (std::size_t j = 0; j < r; ++j)
      w[j] = f.mul(b[j][0], w0inv);
    u64 s = 0;
    for (std::size_t j = 0; j < r; ++j)
      s = f.add(s, f.mul(f.mul(w[j], w[t.inverse_class[j]]), f.inv(t.class_sizes[j] % f.p)));
    u64 dsq = f.mul(n % f.p, f.inv(s));
    std::size_t d = 0;
    for (std::size_t cand = 1; cand * cand <= n; ++cand)
      if ((cand * cand) % f.p == dsq)
        d = cand;
    if (d == 0)
      throw std::logic_error("character degree not recovered");
    std::vector<u64> theta(r);
    for (std::size_t j = 0; j < r; ++j)
      theta[j] = f.mul(f.mul(d % f.p, w[j]), f.inv(t.class_sizes[j] % f.p));
    Row row{d, {}};
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t o = power_class[j].size();
      u64 zo = f.pow(z, e / o);
      u64 oinv = f.inv(o % f.p);
      std::vector<Rational> coeffs(e, Rational(0));
      std::size_t total = 0;
      for (std::size_t a = 0; a < o; ++a) {
        u64 acc = 0;
        u64 step = f.pow(f.inv(zo), a); // zeta_o^(-a)
        u64 w_t = 1;
        for (std::size_t k = 0; k < o; ++k) {
          acc = f.add(acc, f.mul(theta[power_class[j][k]], w_t));
          w_t = f.mul(w_t, step);
        }
        u64 mult = f.mul(acc, oinv);
        if (mult > d)
          throw std::logic_error("eigenvalue multiplicity out of range");
        coeffs[a * (e / o)] += Rational(static_cast<unsigned long>(mult));
        total += mult;
      }
      if (total != d)
        throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(reduce_cyclotomic(std::move(coeffs), e));
    }
    rows.push_back(std::move(row));
  }
  auto is_trivial = [](Row const &row) {
    for (auto const &v : row.values)
      if (v != row.values[0])
        return false;
    return row.degree == 1;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](Row const &a, Row const &b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb)
      return ta;
    if (a.degree != b.degree)
      return a.degree < b.degree;
    return a.values < b.values;
  });
  for (auto &row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
  }
  return t;
}

CharacterTable character_table(PermGroup const &g, std::size_t order_gate)
{
  return character_table(FiniteGroup(g, order_gate));
}

bool table_is_consistent(CharacterTable const &t)
{
  std::size_t r = t.class_sizes.size();
  if (t.values.size() != r || t.degrees.size() != r)
    return false;
  std::size_t sum_sq = 0;
  for (auto d : t.degrees)
    sum_sq += d * d;
  if (sum_sq != t.group_order)
    return false;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      CyclotomicValue acc(t.values[a][0].size(), Rational(0));
      for (std::size_t j = 0; j < r; ++j) {
        auto prod = cyclo_mul(t.values[a][j], t.values[b][t.inverse_class[j]], t.root_order);
        for (std::size_t k = 0; k < acc.size(); ++k)
          acc[k] += Rational(static_cast<unsigned long>(t.class_sizes[j])) * prod[k];
      }
      CyclotomicValue expected(acc.size(), Rational(0));
      if (a == b)
        expected[0] = Rational(static_cast<unsigned long>(t.group_order));
      if (acc != expected)
        return false;
    }
  return true;
}

std::size_t min_faithful_degree(CharacterTable const &t)
{
  std::size_t r = t.class_sizes.size();
  std::vector<bool> all(r, true);
  std::map<std::vector<bool>, std::size_t> best{{all, 0}};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<bool> ker(r, false);
    for (auto j : t.kernel_classes(i))
      ker[j] = true;
    auto snapshot = best;
    for (auto const &[state, cost] : snapshot) {
      std::vector<bool> meet(r);
      for (std::size_t j = 0; j < r; ++j)
        meet[j] = state[j] && ker[j];
      std::size_t c = cost + t.degrees[i];
      auto it = best.find(meet);
      if (it == best.end() || it->second > c)
        best[meet] = c;
    }
  }
  std::vector<bool> identity_only(r, false);
  identity_only[0] = true;
  return best.at(identity_only);
}

} // namespace jinf
