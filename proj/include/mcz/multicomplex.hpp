#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcz/rational.hpp"

namespace mcz {

/// Exact complex number over Q, with respect to the distinguished unit i1.
struct ComplexRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) = default;

    ComplexRational inverse() const;  // throws zero_divisor_error on 0
    ComplexRational times_i() const { return {-im, re}; }
};

/// Element of BQ_n: 2^n exact rational coordinates over the canonical unit
/// basis. Coordinate index is the bitmask of the unit product: bit t-1 set
/// iff the unit i_t appears (index 0 = real part). This ordering is the wire
/// format and must not change.
class Multicomplex {
public:
    Multicomplex(int level, std::vector<Rational> coords);

    /// Zero element at the given level.
    static Multicomplex zero(int level);
    /// Multiplicative identity at the given level.
    static Multicomplex one(int level);
    /// Basis unit with the given coordinate mask.
    static Multicomplex unit(int level, std::size_t mask);

    int level() const { return level_; }
    std::size_t dim() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& coord(std::size_t mask) const { return coords_.at(mask); }

    bool is_zero() const;

    friend bool operator==(const Multicomplex&, const Multicomplex&) = default;

    std::string to_json() const;
    static Multicomplex from_json(const std::string& text);

private:
    int level_;
    std::vector<Rational> coords_;
};

/// Final-stage idempotent coordinates: 2^{n-1} complex-rational components
/// beta_j, in the fixed recursive enumeration of S_{n-1}.
struct IdempotentVector {
    int level = 2;
    std::vector<ComplexRational> components;

    friend bool operator==(const IdempotentVector&, const IdempotentVector&) = default;
};

Multicomplex mc_add(const Multicomplex& a, const Multicomplex& b);
Multicomplex mc_sub(const Multicomplex& a, const Multicomplex& b);

/// Product under the unit algebra: unit I times unit J equals
/// (-1)^{|I cap J|} times unit (I xor J), extended bilinearly.
Multicomplex mc_mul(const Multicomplex& a, const Multicomplex& b);

Multicomplex mc_scale(const Rational& c, const Multicomplex& z);
Multicomplex mc_pow(const Multicomplex& z, unsigned m);

/// One splitting stage: Z = Z1 + i_m Z2 with Z1, Z2 at level m-1 maps to
/// the pair (Z1 - i_{m-1} Z2, Z1 + i_{m-1} Z2). Requires level >= 2.
std::pair<Multicomplex, Multicomplex> mc_split(const Multicomplex& z);

/// Inverse of mc_split.
Multicomplex mc_merge(const Multicomplex& minus_part, const Multicomplex& plus_part);

/// Intermediate-stage decomposition: 2^k components at level n-k, in the
/// recursive order (first split = most significant index bit). 1 <= k <= n-1.
std::vector<Multicomplex> to_idempotent_stage(const Multicomplex& z, int k);

/// Final-stage idempotent coordinates (k = n-1). Requires level >= 2.
IdempotentVector to_idempotent(const Multicomplex& z);

/// Exact inverse of to_idempotent.
Multicomplex from_idempotent(const IdempotentVector& v);

/// Componentwise complex inverse; throws zero_divisor_error when some
/// idempotent component vanishes. Requires level >= 2.
Multicomplex mc_inverse(const Multicomplex& z);

/// True iff z != 0 and some idempotent component is zero. Requires level >= 2.
bool is_zero_divisor(const Multicomplex& z);

/// The set S_k of 2^k mutually annihilating idempotents at level n, built
/// from e_{kl} = (1 + i_k i_l)/2, in the fixed enumeration order matching
/// to_idempotent (S_{n-1}[j] maps to the j-th idempotent coordinate).
std::vector<Multicomplex> idempotent_set(int n, int k);

std::string complex_rational_to_string(const ComplexRational& c);

}  // namespace mcz
