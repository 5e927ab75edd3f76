#include "mcz/multicomplex.hpp"

#include <bit>
#include <cstdint>
#include <utility>

#include <json.hpp>

#include "mcz/errors.hpp"

namespace mcz {

namespace {

void require_same_level(const Multicomplex& a, const Multicomplex& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("level mismatch: " + std::to_string(a.level()) +
                                    " vs " + std::to_string(b.level()));
}

void require_splittable(const Multicomplex& z) {
    if (z.level() < 2)
        throw std::invalid_argument("idempotent operations require level >= 2");
}

// i_m * W for W at level m, m >= 1: toggles the top unit bit, with a sign
// when the unit was already present (i_m^2 = -1).
std::vector<Rational> times_top_unit(const std::vector<Rational>& w, int m) {
    const std::size_t bit = std::size_t{1} << (m - 1);
    std::vector<Rational> out(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j & bit)
            out[j ^ bit] = -w[j];
        else
            out[j ^ bit] = w[j];
    }
    return out;
}

}  // namespace

ComplexRational ComplexRational::inverse() const {
    if (is_zero()) throw zero_divisor_error("complex-rational zero has no inverse");
    Rational n2 = re * re + im * im;
    return {re / n2, -im / n2};
}

Multicomplex::Multicomplex(int level, std::vector<Rational> coords)
    : level_(level), coords_(std::move(coords)) {
    if (level_ < 1) throw std::invalid_argument("level must be >= 1");
    if (coords_.size() != (std::size_t{1} << level_))
        throw std::invalid_argument("coords length must be 2^level");
}

Multicomplex Multicomplex::zero(int level) {
    return Multicomplex(level, std::vector<Rational>(std::size_t{1} << level));
}

Multicomplex Multicomplex::one(int level) { return unit(level, 0); }

Multicomplex Multicomplex::unit(int level, std::size_t mask) {
    std::vector<Rational> c(std::size_t{1} << level);
    c.at(mask) = 1;
    return Multicomplex(level, std::move(c));
}

bool Multicomplex::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

Multicomplex mc_add(const Multicomplex& a, const Multicomplex& b) {
    require_same_level(a, b);
    std::vector<Rational> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a.coords()[i] + b.coords()[i];
    return Multicomplex(a.level(), std::move(c));
}

Multicomplex mc_sub(const Multicomplex& a, const Multicomplex& b) {
    require_same_level(a, b);
    std::vector<Rational> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a.coords()[i] - b.coords()[i];
    return Multicomplex(a.level(), std::move(c));
}

Multicomplex mc_scale(const Rational& c, const Multicomplex& z) {
    std::vector<Rational> out(z.dim());
    for (std::size_t i = 0; i < z.dim(); ++i) out[i] = c * z.coords()[i];
    return Multicomplex(z.level(), std::move(out));
}

Multicomplex mc_mul(const Multicomplex& a, const Multicomplex& b) {
    require_same_level(a, b);
    const std::size_t n = a.dim();

    // Clear denominators once, convolve integer numerators, divide back.
    BigInt la = 1, lb = 1;
    for (const auto& c : a.coords()) la = lcm(la, denominator(c));
    for (const auto& c : b.coords()) lb = lcm(lb, denominator(c));
    std::vector<BigInt> an(n), bn(n);
    BigInt maxa = 0, maxb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        an[i] = numerator(a.coords()[i]) * (la / denominator(a.coords()[i]));
        bn[i] = numerator(b.coords()[i]) * (lb / denominator(b.coords()[i]));
        if (abs(an[i]) > maxa) maxa = abs(an[i]);
        if (abs(bn[i]) > maxb) maxb = abs(bn[i]);
    }

    std::vector<BigInt> conv(n);
    if (maxa * maxb * n < (BigInt(1) << 62)) {
        // small-numerator fast path
        std::vector<std::int64_t> ai(n), bi(n), ci(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ai[i] = static_cast<std::int64_t>(an[i]);
            bi[i] = static_cast<std::int64_t>(bn[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (ai[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (bi[j] == 0) continue;
                const std::int64_t term = ai[i] * bi[j];
                if (std::popcount(i & j) & 1)
                    ci[i ^ j] -= term;
                else
                    ci[i ^ j] += term;
            }
        }
        for (std::size_t i = 0; i < n; ++i) conv[i] = ci[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (an[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (bn[j] == 0) continue;
                if (std::popcount(i & j) & 1)
                    conv[i ^ j] -= an[i] * bn[j];
                else
                    conv[i ^ j] += an[i] * bn[j];
            }
        }
    }

    const BigInt den = la * lb;
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = Rational(conv[i], den);
    return Multicomplex(a.level(), std::move(out));
}

Multicomplex mc_pow(const Multicomplex& z, unsigned m) {
    Multicomplex acc = Multicomplex::one(z.level());
    Multicomplex base = z;
    while (m) {
        if (m & 1) acc = mc_mul(acc, base);
        m >>= 1;
        if (m) base = mc_mul(base, base);
    }
    return acc;
}

std::pair<Multicomplex, Multicomplex> mc_split(const Multicomplex& z) {
    require_splittable(z);
    const int m = z.level();
    const std::size_t half = z.dim() / 2;
    std::vector<Rational> z1(z.coords().begin(), z.coords().begin() + half);
    std::vector<Rational> z2(z.coords().begin() + half, z.coords().end());
    const auto iz2 = times_top_unit(z2, m - 1);
    std::vector<Rational> p(half), q(half);
    for (std::size_t i = 0; i < half; ++i) {
        p[i] = z1[i] - iz2[i];
        q[i] = z1[i] + iz2[i];
    }
    return {Multicomplex(m - 1, std::move(p)), Multicomplex(m - 1, std::move(q))};
}

Multicomplex mc_merge(const Multicomplex& minus_part, const Multicomplex& plus_part) {
    require_same_level(minus_part, plus_part);
    const int m = minus_part.level() + 1;
    const std::size_t half = minus_part.dim();
    std::vector<Rational> z1(half), diff(half);
    for (std::size_t i = 0; i < half; ++i) {
        z1[i] = (minus_part.coords()[i] + plus_part.coords()[i]) / 2;
        diff[i] = (minus_part.coords()[i] - plus_part.coords()[i]) / 2;
    }
    // P = Z1 - i_{m-1} Z2 and Q = Z1 + i_{m-1} Z2, so Z2 = i_{m-1}(P - Q)/2.
    auto z2 = times_top_unit(diff, m - 1);
    std::vector<Rational> coords;
    coords.reserve(2 * half);
    coords.insert(coords.end(), z1.begin(), z1.end());
    coords.insert(coords.end(), z2.begin(), z2.end());
    return Multicomplex(m, std::move(coords));
}

std::vector<Multicomplex> to_idempotent_stage(const Multicomplex& z, int k) {
    if (k < 1 || k > z.level() - 1)
        throw std::invalid_argument("stage k must satisfy 1 <= k <= level-1");
    std::vector<Multicomplex> parts{z};
    for (int stage = 0; stage < k; ++stage) {
        std::vector<Multicomplex> next;
        next.reserve(parts.size() * 2);
        for (const auto& part : parts) {
            auto [p, q] = mc_split(part);
            next.push_back(std::move(p));
            next.push_back(std::move(q));
        }
        parts = std::move(next);
    }
    // The interleaved construction yields first-split-major order.
    return parts;
}

IdempotentVector to_idempotent(const Multicomplex& z) {
    require_splittable(z);
    auto parts = to_idempotent_stage(z, z.level() - 1);
    IdempotentVector v;
    v.level = z.level();
    v.components.reserve(parts.size());
    for (const auto& part : parts)
        v.components.push_back({part.coords()[0], part.coords()[1]});
    return v;
}

Multicomplex from_idempotent(const IdempotentVector& v) {
    if (v.level < 2) throw std::invalid_argument("idempotent vector requires level >= 2");
    if (v.components.size() != (std::size_t{1} << (v.level - 1)))
        throw std::invalid_argument("components length must be 2^{level-1}");
    std::vector<Multicomplex> parts;
    parts.reserve(v.components.size());
    for (const auto& c : v.components)
        parts.push_back(Multicomplex(1, {c.re, c.im}));
    while (parts.size() > 1) {
        std::vector<Multicomplex> next;
        next.reserve(parts.size() / 2);
        for (std::size_t i = 0; i < parts.size(); i += 2)
            next.push_back(mc_merge(parts[i], parts[i + 1]));
        parts = std::move(next);
    }
    return parts[0];
}

Multicomplex mc_inverse(const Multicomplex& z) {
    auto v = to_idempotent(z);
    for (auto& c : v.components) {
        if (c.is_zero())
            throw zero_divisor_error("multicomplex element is a zero divisor or zero");
        c = c.inverse();
    }
    return from_idempotent(v);
}

bool is_zero_divisor(const Multicomplex& z) {
    if (z.is_zero()) return false;
    const auto v = to_idempotent(z);
    for (const auto& c : v.components)
        if (c.is_zero()) return true;
    return false;
}

std::vector<Multicomplex> idempotent_set(int n, int k) {
    if (n < 2) throw std::invalid_argument("idempotent sets require level >= 2");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("k must satisfy 1 <= k <= n-1");

    const Rational half(1, 2);
    auto make_e = [&](int a, int b, bool bar) {
        std::vector<Rational> c(std::size_t{1} << n);
        c[0] = half;
        const std::size_t mask = (std::size_t{1} << (a - 1)) | (std::size_t{1} << (b - 1));
        c[mask] = bar ? -half : half;
        return Multicomplex(n, std::move(c));
    };

    std::vector<Multicomplex> s{make_e(n - 1, n, false), make_e(n - 1, n, true)};
    for (int j = 2; j <= k; ++j) {
        const Multicomplex e = make_e(n - j, n - j + 1, false);
        const Multicomplex ebar = make_e(n - j, n - j + 1, true);
        std::vector<Multicomplex> next;
        next.reserve(s.size() * 2);
        for (const auto& prev : s) {
            next.push_back(mc_mul(prev, e));
            next.push_back(mc_mul(prev, ebar));
        }
        s = std::move(next);
    }
    return s;
}

std::string Multicomplex::to_json() const {
    nlohmann::json j;
    j["level"] = level_;
    auto arr = nlohmann::json::array();
    for (const auto& c : coords_) arr.push_back(rational_to_string(c));
    j["coords"] = std::move(arr);
    return j.dump();
}

Multicomplex Multicomplex::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int level = j.at("level").get<int>();
    std::vector<Rational> coords;
    for (const auto& item : j.at("coords"))
        coords.push_back(rational_from_string(item.get<std::string>()));
    return Multicomplex(level, std::move(coords));
}

std::string complex_rational_to_string(const ComplexRational& c) {
    return rational_to_string(c.re) + (c.im < 0 ? "" : "+") + rational_to_string(c.im) + "i";
}

}  // namespace mcz
