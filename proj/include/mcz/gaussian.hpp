#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mcz {

/// chi_{-4}: 1 for n = 1 mod 4, -1 for n = 3 mod 4, 0 for even n.
int chi_minus4(std::int64_t n);

/// Exact lattice-point count of p^2 + q^2 = n, by scanning |p| <= sqrt(n).
std::int64_t r2_bruteforce(std::int64_t n, std::int64_t bound = 100'000'000);

/// 4 * sum_{d|n} chi_{-4}(d).
std::int64_t r2_via_divisors(std::int64_t n);

/// (number of divisors = 1 mod 4, number of divisors = 3 mod 4).
std::pair<std::int64_t, std::int64_t> sigma_counts(std::int64_t n);

/// Number of ideals of Z[i] with norm n: a_n = r2(n) / 4.
std::int64_t ideal_count(std::int64_t n);

}  // namespace mcz
