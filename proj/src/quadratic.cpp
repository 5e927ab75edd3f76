#include "mcz/quadratic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "mcz/errors.hpp"

namespace mcz {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_square_free(std::int64_t d) {
    std::int64_t n = d < 0 ? -d : d;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<bool> composite(static_cast<std::size_t>(n < 1 ? 0 : n) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::int64_t q = p * p; q <= n; q += p) composite[q] = true;
    }
    return primes;
}

QuadraticField make_field(std::int64_t d) {
    if (d == 0 || d == 1) throw std::invalid_argument("d must differ from 0 and 1");
    if (!is_square_free(d)) throw std::invalid_argument("d must be square-free");
    QuadraticField f;
    f.d = d;
    f.delta = (mod_pos(d, 4) == 1) ? d : 4 * d;
    if (d < 0) f.unit_order = unit_group_order(d);
    static const std::int64_t class_one[] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
    for (auto v : class_one)
        if (d == v) f.class_number_hint = 1;
    return f;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (a % p == 0) return 0;
    const std::int64_t r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        while (n % 2 == 0) {
            n /= 2;
            const std::int64_t am = mod_pos(a, 8);
            if (am == 3 || am == 5) result = -result;
        }
    }
    // n odd and positive: the Jacobi reciprocity loop.
    a = mod_pos(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int chi_K(const QuadraticField& field, std::int64_t m) {
    return kronecker_symbol(field.delta, m);
}

int dirichlet_chi(const QuadraticField& field, std::int64_t m) {
    const std::int64_t period = field.delta < 0 ? -field.delta : field.delta;
    if (std::gcd(m, field.delta) != 1)
        throw std::invalid_argument("m must be coprime to the discriminant");
    m = mod_pos(m, period);
    const std::int64_t d = field.d;
    if (mod_pos(d, 4) == 1) return kronecker_symbol(m, d);
    if (mod_pos(d, 4) == 3) {
        const int sign = ((m - 1) / 2) % 2 ? -1 : 1;
        return sign * kronecker_symbol(m, d);
    }
    // d even and square-free, so d/2 is odd and d = 2, 6 mod 8
    if (mod_pos(d, 8) == 2) {
        const int sign = ((m * m - 1) / 8) % 2 ? -1 : 1;
        return sign * kronecker_symbol(m, d / 2);
    }
    const int sign = ((m - 1) * (m + 5) / 8) % 2 ? -1 : 1;
    return sign * kronecker_symbol(m, d / 2);
}

SplittingType splitting_type(const QuadraticField& field, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    switch (chi_K(field, p)) {
        case 1: return SplittingType::Split;
        case -1: return SplittingType::Inert;
        default: return SplittingType::Ramified;
    }
}

double L_chi_at_1(const QuadraticField& field) {
    const std::int64_t period = field.delta < 0 ? -field.delta : field.delta;
    const double abs_delta = static_cast<double>(period);
    double sum = 0.0;
    if (field.d > 0) {
        for (std::int64_t r = 1; r < period; ++r)
            sum += chi_K(field, r) *
                   std::log(std::sin(std::numbers::pi * r / abs_delta));
        return -sum / std::sqrt(abs_delta);
    }
    for (std::int64_t r = 1; r < period; ++r)
        sum += static_cast<double>(chi_K(field, r) * r);
    return -std::numbers::pi * sum / std::pow(abs_delta, 1.5);
}

PellSolution pell_fundamental(std::int64_t d, std::int64_t y_bound) {
    if (d <= 0 || !is_square_free(d))
        throw std::invalid_argument("d must be positive and square-free");
    for (std::int64_t y = 1; y <= y_bound; ++y) {
        const std::int64_t x2 = 1 + d * y * y;
        const auto x = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x2))));
        for (std::int64_t c = x - 1; c <= x + 1; ++c)
            if (c >= 1 && c * c == x2) return {c, y};
    }
    throw bound_error("Pell search bound exceeded");
}

int unit_group_order(std::int64_t d) {
    if (d >= 0) throw std::invalid_argument("unit_group_order requires d < 0");
    if (d == -1) return 4;
    if (d == -3) return 6;
    return 2;
}

}  // namespace mcz
