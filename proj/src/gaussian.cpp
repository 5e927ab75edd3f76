#include "mcz/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "mcz/errors.hpp"

namespace mcz {

namespace {

// largest q with q*q <= r
std::int64_t isqrt64(std::int64_t r) {
    auto q = static_cast<std::int64_t>(std::sqrt(static_cast<double>(r)));
    while (q > 0 && q * q > r) --q;
    while ((q + 1) * (q + 1) <= r) ++q;
    return q;
}

void require_positive(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

}  // namespace

int chi_minus4(std::int64_t n) {
    const std::int64_t r = ((n % 4) + 4) % 4;
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

std::int64_t r2_bruteforce(std::int64_t n, std::int64_t bound) {
    require_positive(n);
    if (n > bound) throw bound_error("r2 scan bound exceeded");
    const std::int64_t s = isqrt64(n);
    std::int64_t count = 0;
    for (std::int64_t p = -s; p <= s; ++p) {
        const std::int64_t rem = n - p * p;
        const std::int64_t q = isqrt64(rem);
        if (q * q == rem) count += (q == 0) ? 1 : 2;
    }
    return count;
}

std::int64_t r2_via_divisors(std::int64_t n) {
    require_positive(n);
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += chi_minus4(d);
        if (d != n / d) sum += chi_minus4(n / d);
    }
    return 4 * sum;
}

std::pair<std::int64_t, std::int64_t> sigma_counts(std::int64_t n) {
    require_positive(n);
    std::int64_t s1 = 0, s3 = 0;
    auto tally = [&](std::int64_t d) {
        const std::int64_t r = d % 4;
        if (r == 1) ++s1;
        else if (r == 3) ++s3;
    };
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        tally(d);
        if (d != n / d) tally(n / d);
    }
    return {s1, s3};
}

std::int64_t ideal_count(std::int64_t n) {
    return r2_via_divisors(n) / 4;
}

}  // namespace mcz
