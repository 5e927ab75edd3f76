#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mcz/rational.hpp"

namespace mcz {

/// Exact Dirichlet-series coefficients indexed 1..N.
struct CoefficientTable {
    std::string label;
    std::int64_t N = 0;
    std::vector<BigInt> values;  // values[n-1] is the coefficient of n^{-s}

    const BigInt& at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

/// The convolution identity delta = (1, 0, 0, ...).
CoefficientTable delta_table(std::int64_t N);

/// All-ones table (Riemann zeta coefficients).
CoefficientTable ones_table(std::int64_t N);

/// a_n = sum_{d|n} chi_{-4}(d), the Dedekind coefficients of Q(i).
CoefficientTable coeffs_zeta_qi(std::int64_t N);

/// c_n = sum_{d|n} a_d b_{n/d}, exact.
CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b);

/// 2^{level-1}-fold self-convolution of coeffs_zeta_qi, by repeated squaring.
CoefficientTable coeffs_bqn(int level, std::int64_t N);

struct PartialSum {
    std::complex<double> value;
    /// Crude integral-comparison tail estimate; informative only, and NaN
    /// unless Re(s) > 1.
    double tail_bound;
};

/// sum_{n=1..N} values[n] n^{-s} in binary64.
PartialSum partial_sum(const CoefficientTable& table, std::complex<double> s);

}  // namespace mcz
