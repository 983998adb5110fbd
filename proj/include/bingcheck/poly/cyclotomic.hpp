/*
   Copyright 2026 The bingcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/dense_poly.hpp"

namespace bingcheck::poly {

inline std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// True if n = p^k with p prime, k >= 1; reports p.
inline bool is_prime_power(long n, long* prime = nullptr) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    if (n != 1) return false;
    if (prime) *prime = p;
    return true;
  }
  if (prime) *prime = n;
  return true;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

/// d-th cyclotomic polynomial: t^d - 1 divided exactly by Phi_e for every
/// proper divisor e of d. Results are memoized.
inline IntPoly cyclotomic(long d) {
  if (d < 1) throw DomainError("cyclotomic: index must be >= 1");
  static std::mutex mutex;
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly result = IntPoly::monomial(BigInt(1), static_cast<std::size_t>(d)) - IntPoly::constant(BigInt(1));
  for (long e : divisors(d)) {
    if (e == d) break;
    result = exact_quotient(result, cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(d, result);
  return result;
}

}  // namespace bingcheck::poly
