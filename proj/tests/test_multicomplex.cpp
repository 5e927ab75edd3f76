#include <doctest.h>

#include <random>

#include "mcz/errors.hpp"
#include "mcz/multicomplex.hpp"

using namespace mcz;

namespace {

Multicomplex random_mc(int level, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> coords(std::size_t{1} << level);
    for (auto& c : coords) c = Rational(num(rng), den(rng));
    return Multicomplex(level, std::move(coords));
}

IdempotentVector componentwise_mul(IdempotentVector a, const IdempotentVector& b) {
    for (std::size_t j = 0; j < a.components.size(); ++j)
        a.components[j] = a.components[j] * b.components[j];
    return a;
}

// units of BC_2 in the canonical index order
const Multicomplex one2 = Multicomplex::one(2);
const Multicomplex i1 = Multicomplex::unit(2, 1);
const Multicomplex i2 = Multicomplex::unit(2, 2);
const Multicomplex kunit = Multicomplex::unit(2, 3);

}  // namespace

TEST_CASE("defining unit relations") {
    CHECK(mc_mul(i1, i1) == mc_scale(Rational(-1), one2));
    CHECK(mc_mul(i2, i2) == mc_scale(Rational(-1), one2));
    CHECK(mc_mul(i1, i2) == kunit);
    CHECK(mc_mul(kunit, kunit) == one2);  // hyperbolic unit squares to 1
}

TEST_CASE("sign rule against hand-computed products at n=3") {
    // (i1 i2)(i2 i3) = i1 i2^2 i3 = -i1 i3
    const auto a = Multicomplex::unit(3, 0b011);
    const auto b = Multicomplex::unit(3, 0b110);
    CHECK(mc_mul(a, b) == mc_scale(Rational(-1), Multicomplex::unit(3, 0b101)));
    // (i1 i2 i3)^2 = (-1)^3 = -1
    const auto c = Multicomplex::unit(3, 0b111);
    CHECK(mc_mul(c, c) == mc_scale(Rational(-1), Multicomplex::one(3)));
}

TEST_CASE("addition examples") {
    // (1 + j) + (2 - j) = 3
    const auto a = mc_add(one2, i2);
    const auto b = mc_sub(mc_scale(Rational(2), one2), i2);
    CHECK(mc_add(a, b) == mc_scale(Rational(3), one2));

    std::mt19937_64 rng(1);
    const auto z = random_mc(3, rng);
    CHECK(mc_add(z, Multicomplex::zero(3)) == z);
    const auto w = random_mc(3, rng);
    const auto sum = mc_add(z, w);
    for (std::size_t i = 0; i < z.dim(); ++i)
        CHECK(sum.coords()[i] == z.coords()[i] + w.coords()[i]);
}

TEST_CASE("level mismatch is rejected") {
    CHECK_THROWS_AS(mc_add(one2, Multicomplex::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(mc_mul(one2, Multicomplex::one(3)), std::invalid_argument);
}

TEST_CASE("e and e-dagger") {
    const auto s1 = idempotent_set(2, 1);
    REQUIRE(s1.size() == 2);
    const auto& e = s1[0];
    const auto& ed = s1[1];
    CHECK(mc_mul(e, ed).is_zero());
    CHECK(mc_mul(e, e) == e);
    CHECK(mc_mul(ed, ed) == ed);
    CHECK(mc_add(e, ed) == one2);
    CHECK(mc_sub(e, ed) == kunit);
}

TEST_CASE("n=2 transform matches the closed coordinate map") {
    // x1 + i x2 + j x3 + k x4 -> ((x1+x4) + i(x2-x3), (x1-x4) + i(x2+x3))
    std::mt19937_64 rng(2);
    for (int it = 0; it < 50; ++it) {
        const auto z = random_mc(2, rng);
        const auto& x = z.coords();
        const auto v = to_idempotent(z);
        REQUIRE(v.components.size() == 2);
        CHECK(v.components[0].re == x[0] + x[3]);
        CHECK(v.components[0].im == x[1] - x[2]);
        CHECK(v.components[1].re == x[0] - x[3]);
        CHECK(v.components[1].im == x[1] + x[2]);
    }
}

TEST_CASE("n=3 transform matches the four-row coordinate map") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        const auto z = random_mc(3, rng);
        // paper-style labels: x1..x8 = 1, i1, i2, i1i2, i3, i1i3, i2i3, i1i2i3
        const auto& c = z.coords();
        const Rational &x1 = c[0], &x2 = c[1], &x3 = c[2], &x4 = c[3], &x5 = c[4],
                       &x6 = c[5], &x7 = c[6], &x8 = c[7];
        const auto v = to_idempotent(z);
        REQUIRE(v.components.size() == 4);
        CHECK(v.components[0] == ComplexRational{x1 + x7 + x4 - x6, x2 + x8 - x3 + x5});
        CHECK(v.components[1] == ComplexRational{x1 + x7 - x4 + x6, x2 + x8 + x3 - x5});
        CHECK(v.components[2] == ComplexRational{x1 - x7 + x4 + x6, x2 - x8 - x3 - x5});
        CHECK(v.components[3] == ComplexRational{x1 - x7 - x4 - x6, x2 - x8 + x3 + x5});
    }
}

TEST_CASE("idempotent transform examples") {
    const auto vone = to_idempotent(one2);
    CHECK(vone.components[0] == ComplexRational{1, 0});
    CHECK(vone.components[1] == ComplexRational{1, 0});

    const auto vk = to_idempotent(kunit);
    CHECK(vk.components[0] == ComplexRational{1, 0});
    CHECK(vk.components[1] == ComplexRational{-1, 0});

    CHECK(from_idempotent(vone) == one2);
    CHECK(from_idempotent(vk) == kunit);
    CHECK_THROWS_AS(to_idempotent(Multicomplex::one(1)), std::invalid_argument);
}

TEST_CASE("roundtrip from_idempotent after to_idempotent") {
    std::mt19937_64 rng(4);
    for (int level = 2; level <= 4; ++level)
        for (int it = 0; it < 25; ++it) {
            const auto z = random_mc(level, rng);
            CHECK(from_idempotent(to_idempotent(z)) == z);
        }
}

TEST_CASE("idempotent representation is a ring homomorphism") {
    std::mt19937_64 rng(5);
    for (int level = 2; level <= 4; ++level)
        for (int it = 0; it < 40; ++it) {
            const auto z = random_mc(level, rng);
            const auto w = random_mc(level, rng);
            CHECK(to_idempotent(mc_mul(z, w)) ==
                  componentwise_mul(to_idempotent(z), to_idempotent(w)));
            auto sum = to_idempotent(z);
            const auto vw = to_idempotent(w);
            for (std::size_t j = 0; j < sum.components.size(); ++j)
                sum.components[j] = sum.components[j] + vw.components[j];
            CHECK(to_idempotent(mc_add(z, w)) == sum);
        }
}

TEST_CASE("power law in idempotent coordinates") {
    std::mt19937_64 rng(6);
    const auto z = random_mc(3, rng);
    const auto v = to_idempotent(z);
    for (unsigned m = 2; m <= 5; ++m) {
        const auto vp = to_idempotent(mc_pow(z, m));
        for (std::size_t j = 0; j < v.components.size(); ++j) {
            ComplexRational expect{1, 0};
            for (unsigned t = 0; t < m; ++t) expect = expect * v.components[j];
            CHECK(vp.components[j] == expect);
        }
    }
}

TEST_CASE("S_k algebra") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const auto s = idempotent_set(n, k);
            REQUIRE(s.size() == (std::size_t{1} << k));
            auto total = Multicomplex::zero(n);
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(mc_mul(s[i], s[i]) == s[i]);
                total = mc_add(total, s[i]);
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    CHECK(mc_mul(s[i], s[j]).is_zero());
            }
            CHECK(total == Multicomplex::one(n));
        }
    CHECK_THROWS_AS(idempotent_set(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(idempotent_set(3, 3), std::invalid_argument);
}

TEST_CASE("S_{n-1} order matches the idempotent coordinates") {
    for (int n = 2; n <= 4; ++n) {
        const auto s = idempotent_set(n, n - 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const auto v = to_idempotent(s[j]);
            for (std::size_t t = 0; t < v.components.size(); ++t) {
                const ComplexRational want{t == j ? 1 : 0, 0};
                CHECK(v.components[t] == want);
            }
        }
    }
}

TEST_CASE("inverse and zero divisors") {
    const auto two = mc_scale(Rational(2), one2);
    CHECK(mc_inverse(two) == mc_scale(Rational(1, 2), one2));

    const auto s1 = idempotent_set(2, 1);
    CHECK_THROWS_AS(mc_inverse(s1[0]), zero_divisor_error);
    CHECK(is_zero_divisor(s1[1]));
    CHECK_FALSE(is_zero_divisor(mc_add(one2, i1)));
    CHECK_FALSE(is_zero_divisor(Multicomplex::zero(2)));

    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 20) {
        const auto z = random_mc(3, rng);
        if (z.is_zero() || is_zero_divisor(z)) continue;
        CHECK(mc_mul(z, mc_inverse(z)) == Multicomplex::one(3));
        ++tested;
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 20; ++it) {
        const auto a = random_mc(3, rng);
        const auto b = random_mc(3, rng);
        const auto c = random_mc(3, rng);
        CHECK(mc_mul(a, b) == mc_mul(b, a));
        CHECK(mc_mul(mc_mul(a, b), c) == mc_mul(a, mc_mul(b, c)));
        CHECK(mc_mul(a, mc_add(b, c)) == mc_add(mc_mul(a, b), mc_mul(a, c)));
    }
}

TEST_CASE("intermediate-stage decomposition is consistent with the final stage") {
    std::mt19937_64 rng(9);
    const auto z = random_mc(4, rng);
    const auto stage1 = to_idempotent_stage(z, 1);
    REQUIRE(stage1.size() == 2);
    // splitting each stage-1 part to the end reproduces the final coordinates
    const auto full = to_idempotent(z);
    const auto left = to_idempotent(stage1[0]);
    const auto right = to_idempotent(stage1[1]);
    for (std::size_t j = 0; j < left.components.size(); ++j) {
        CHECK(full.components[j] == left.components[j]);
        CHECK(full.components[j + left.components.size()] == right.components[j]);
    }
}

TEST_CASE("json wire format") {
    const auto z = Multicomplex(2, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 3)});
    CHECK(z.to_json() ==
          R"({"coords":["1/2","-3/1","0/1","7/3"],"level":2})");
    CHECK(Multicomplex::from_json(z.to_json()) == z);

    std::mt19937_64 rng(10);
    for (int it = 0; it < 10; ++it) {
        const auto w = random_mc(3, rng);
        CHECK(Multicomplex::from_json(w.to_json()) == w);
    }
}
