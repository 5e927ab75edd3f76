#include <doctest.h>

#include <cstdint>

#include "mcz/errors.hpp"
#include "mcz/gaussian.hpp"

using namespace mcz;

TEST_CASE("chi_minus4") {
    CHECK(chi_minus4(1) == 1);
    CHECK(chi_minus4(2) == 0);
    CHECK(chi_minus4(3) == -1);
    CHECK(chi_minus4(4) == 0);
    CHECK(chi_minus4(5) == 1);
    CHECK(chi_minus4(101) == 1);
    CHECK(chi_minus4(103) == -1);
}

TEST_CASE("r2 fixed values") {
    // hand-countable lattice points on x^2 + y^2 = n
    CHECK(r2_bruteforce(1) == 4);   // (+-1,0),(0,+-1)
    CHECK(r2_bruteforce(2) == 4);   // (+-1,+-1)
    CHECK(r2_bruteforce(3) == 0);
    CHECK(r2_bruteforce(4) == 4);
    CHECK(r2_bruteforce(5) == 8);   // (+-1,+-2),(+-2,+-1)
    CHECK(r2_bruteforce(9) == 4);
    CHECK(r2_bruteforce(25) == 12);
    CHECK(r2_bruteforce(50) == 12);
    CHECK(r2_bruteforce(65) == 16);  // 5 * 13, both split
}

TEST_CASE("divisor formula equals the lattice count") {
    for (std::int64_t n = 1; n <= 2000; ++n)
        CHECK(r2_via_divisors(n) == r2_bruteforce(n));
}

TEST_CASE("sigma counts and the difference identity") {
    // divisors of 12: 1,2,3,4,6,12 -> one is 1 mod 4, one is 3 mod 4
    const auto [s1_12, s3_12] = sigma_counts(12);
    CHECK(s1_12 == 1);
    CHECK(s3_12 == 1);
    const auto [s1_25, s3_25] = sigma_counts(25);
    CHECK(s1_25 == 3);  // 1, 5, 25
    CHECK(s3_25 == 0);
    for (std::int64_t n = 1; n <= 500; ++n) {
        const auto [s1, s3] = sigma_counts(n);
        CHECK(4 * (s1 - s3) == r2_bruteforce(n));
    }
}

TEST_CASE("ideal counts") {
    CHECK(ideal_count(1) == 1);
    CHECK(ideal_count(2) == 1);
    CHECK(ideal_count(3) == 0);
    CHECK(ideal_count(4) == 1);
    CHECK(ideal_count(5) == 2);
    CHECK(ideal_count(9) == 1);
    CHECK(ideal_count(25) == 3);
    for (std::int64_t n = 1; n <= 300; ++n)
        CHECK(4 * ideal_count(n) == r2_bruteforce(n));
}

TEST_CASE("primes 1 mod 4 have exactly eight representations") {
    for (std::int64_t p : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101})
        CHECK(r2_bruteforce(p) == 8);
    for (std::int64_t p : {3, 7, 11, 19, 23, 31, 43, 47})
        CHECK(r2_bruteforce(p) == 0);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(r2_bruteforce(-1), std::invalid_argument);
    CHECK_THROWS_AS(r2_bruteforce(1'000'000'000'000LL, 100), bound_error);
    CHECK_THROWS_AS(r2_via_divisors(0), std::invalid_argument);
    CHECK_THROWS_AS(sigma_counts(0), std::invalid_argument);
}
