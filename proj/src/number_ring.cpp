#include <sstream>
#include <stdexcept>

#include "jinf/ratlin.hpp"

namespace jinf {

NumberRing::NumberRing(QPoly modulus) : m_(monic(trimmed(std::move(modulus))))
{
  if (jinf::degree(m_) < 1)
    throw std::invalid_argument("number ring modulus must have positive degree");
  if (!is_irreducible_over_Q(m_))
    throw std::invalid_argument("number ring modulus " + poly_to_string(m_) + " is reducible over Q");
}

QPoly NumberRing::reduce(QPoly const &a) const { return divmod(trimmed(a), m_).second; }

QPoly NumberRing::mul(QPoly const &a, QPoly const &b) const { return reduce(a * b); }

RatMat NumberRing::multiplication_matrix(QPoly const &a) const
{
  std::size_t n = degree();
  RatMat out(n, n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    QPoly basis(j + 1, Rational(0));
    basis[j] = 1;
    QPoly prod = mul(a, basis);
    for (std::size_t i = 0; i < prod.size(); ++i)
      out(i, j) = prod[i];
  }
  return out;
}

RatMat NumberRing::expand(std::vector<std::vector<QPoly>> const &m) const
{
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t n = degree();
  RatMat out(rows * n, cols * n, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols)
      throw std::invalid_argument("ragged number ring matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      RatMat block = multiplication_matrix(m[r][c]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out(r * n + i, c * n + j) = block(i, j);
    }
  }
  return out;
}

std::string to_string(RatMat const &m)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << to_string(m(i, j));
    out << "]\n";
  }
  return out.str();
}

} // namespace jinf
