#ifndef JINF_TEST_ORACLES_HPP
#define JINF_TEST_ORACLES_HPP

#include <set>

namespace jinf::test {

// Test-side oracle: z^2 = a x^2 + b y^2 has a primitive solution mod p^k.
inline int hilbert_oracle(long a, long b, long p)
{
  long k = p == 2 ? 6 : 3;
  long mod = 1;
  for (long i = 0; i < k; ++i)
    mod *= p;
  std::set<long> squares;
  for (long z = 0; z < mod; ++z)
    squares.insert(z * z % mod);
  auto red = [&](long v) { return ((v % mod) + mod) % mod; };
  for (long x = 0; x < mod; ++x)
    for (long y = 0; y < mod; ++y) {
      if (x % p == 0 && y % p == 0)
        continue;
      if (squares.count(red(red(a) * (x * x % mod) + red(b) * (y * y % mod))))
        return 1;
    }
  return -1;
}

} // namespace jinf::test

#endif
