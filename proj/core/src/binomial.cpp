#include "ezd/binomial.hpp"

#include "ezd/error.hpp"

namespace ezd {

long long binom_ll(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i);
    acc /= static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(0x7fffffffffffffffLL))
      throw InternalError("binomial coefficient exceeds 64 bits");
  }
  return static_cast<long long>(acc);
}

long long factorial_ll(int n) {
  if (n < 0 || n > 20) throw InternalError("factorial out of 64-bit range");
  long long acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace ezd
