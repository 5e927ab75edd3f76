#include "mcz/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mcz/gaussian.hpp"

namespace mcz {

namespace {

void require_positive(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
}

}  // namespace

CoefficientTable delta_table(std::int64_t N) {
    require_positive(N);
    CoefficientTable t{"delta", N, std::vector<BigInt>(static_cast<std::size_t>(N))};
    t.values[0] = 1;
    return t;
}

CoefficientTable ones_table(std::int64_t N) {
    require_positive(N);
    CoefficientTable t{"zeta", N, std::vector<BigInt>(static_cast<std::size_t>(N), BigInt(1))};
    return t;
}

CoefficientTable coeffs_zeta_qi(std::int64_t N) {
    require_positive(N);
    // Sieve the divisor sum of chi_{-4}: every divisor d contributes
    // chi(d) to each multiple of d.
    std::vector<std::int64_t> a(static_cast<std::size_t>(N), 0);
    for (std::int64_t d = 1; d <= N; d += 2) {
        const std::int64_t c = chi_minus4(d);
        for (std::int64_t m = d; m <= N; m += d) a[static_cast<std::size_t>(m - 1)] += c;
    }
    CoefficientTable t{"zeta_qi", N, std::vector<BigInt>(static_cast<std::size_t>(N))};
    for (std::int64_t n = 1; n <= N; ++n)
        t.values[static_cast<std::size_t>(n - 1)] = a[static_cast<std::size_t>(n - 1)];
    return t;
}

CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b) {
    if (a.N != b.N) throw std::invalid_argument("coefficient tables differ in length");
    const std::int64_t N = a.N;
    CoefficientTable out{a.label + "*" + b.label, N,
                         std::vector<BigInt>(static_cast<std::size_t>(N))};
    for (std::int64_t d = 1; d <= N; ++d) {
        const BigInt& ad = a.at(d);
        if (ad == 0) continue;
        for (std::int64_t m = d; m <= N; m += d)
            out.values[static_cast<std::size_t>(m - 1)] += ad * b.at(m / d);
    }
    return out;
}

CoefficientTable coeffs_bqn(int level, std::int64_t N) {
    if (level < 2) throw std::invalid_argument("level must be >= 2");
    CoefficientTable t = coeffs_zeta_qi(N);
    for (int stage = 1; stage < level; ++stage) t = dirichlet_convolve(t, t);
    t.label = "bqn_" + std::to_string(level);
    return t;
}

PartialSum partial_sum(const CoefficientTable& table, std::complex<double> s) {
    std::complex<double> sum = 0.0;
    for (std::int64_t n = 1; n <= table.N; ++n) {
        const double c = static_cast<double>(table.at(n));
        if (c != 0.0) sum += c * std::exp(-s * std::log(static_cast<double>(n)));
    }
    double tail = std::numeric_limits<double>::quiet_NaN();
    const double sigma = s.real();
    if (sigma > 1.0 && table.N > 1) {
        // Integral comparison with the max coefficient over the top half of
        // the table standing in for the growth of the values.
        double m = 1.0;
        for (std::int64_t n = table.N / 2 + 1; n <= table.N; ++n)
            m = std::max(m, std::abs(static_cast<double>(table.at(n))));
        tail = m * std::pow(static_cast<double>(table.N), 1.0 - sigma) / (sigma - 1.0);
    }
    return {sum, tail};
}

}  // namespace mcz
