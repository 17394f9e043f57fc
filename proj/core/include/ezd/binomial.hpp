#pragma once

namespace ezd {

// binom(n, k) as an exact 64-bit value; 0 when k < 0 or k > n or n < 0.
// Throws InternalError if the value does not fit in 64 bits.
long long binom_ll(long long n, long long k);

// n! for n <= 20 (the largest factorial fitting in 64 bits).
long long factorial_ll(int n);

}  // namespace ezd
