#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mcz {

/// Descriptor of Q(sqrt(d)) for square-free d != 0, 1.
struct QuadraticField {
    std::int64_t d = 0;
    std::int64_t delta = 0;     // d if d = 1 mod 4, else 4d
    int unit_order = 0;         // w_d for d < 0; 0 (unset) for d > 0
    std::optional<int> class_number_hint;  // only the nine listed imaginary fields
};

enum class SplittingType { Split, Inert, Ramified };

QuadraticField make_field(std::int64_t d);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Quadratic-residue symbol mod an odd prime, by modular exponentiation.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// Complete multiplicative extension to all integer lower arguments.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// chi_K(m) = (Delta / m).
int chi_K(const QuadraticField& field, std::int64_t m);

/// The piecewise Dirichlet-character formula; requires gcd(m, Delta) = 1.
int dirichlet_chi(const QuadraticField& field, std::int64_t m);

SplittingType splitting_type(const QuadraticField& field, std::int64_t p);

/// Closed-form L(chi_K, 1): the log-sin sum for d > 0, the weighted
/// character sum for d < 0.
double L_chi_at_1(const QuadraticField& field);

struct PellSolution {
    std::int64_t x;
    std::int64_t y;
};

/// Smallest x, y >= 1 with x^2 - d y^2 = 1, by brute-force search on y.
PellSolution pell_fundamental(std::int64_t d, std::int64_t y_bound = 2'000'000);

/// w_d: 4 for d = -1, 6 for d = -3, else 2. Requires d < 0.
int unit_group_order(std::int64_t d);

}  // namespace mcz
