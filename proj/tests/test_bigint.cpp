#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "rank2/bigint.hpp"

using rank2::BigUint;

namespace {

// Pascal-triangle oracle, independent of the multiplicative route.
BigUint binomial_by_pascal(int n, int k) {
    std::vector<std::vector<BigUint>> row(n + 1);
    for (int i = 0; i <= n; ++i) {
        row[i].resize(i + 1);
        row[i][0] = BigUint(1);
        row[i][i] = BigUint(1);
        for (int j = 1; j < i; ++j) {
            row[i][j] = row[i - 1][j - 1];
            row[i][j].add(row[i - 1][j]);
        }
    }
    return row[n][k];
}

std::uint64_t binomial_u64(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("small binomials match a 64-bit oracle") {
    CHECK(BigUint::binomial(4, 1).to_u64() == 4);
    CHECK(BigUint::binomial(7, 2).to_u64() == 21);
    CHECK(BigUint::binomial(10, 3).to_u64() == binomial_u64(10, 3));
    CHECK(BigUint::binomial(30, 15).to_u64() == binomial_u64(30, 15));
    CHECK(BigUint::binomial(0, 0).to_u64() == 1);
    CHECK(BigUint::binomial(5, 7).is_zero());
}

TEST_CASE("large binomials match the Pascal oracle digit for digit") {
    for (auto [n, k] : {std::pair{40, 20}, {64, 17}, {100, 50}}) {
        CHECK(BigUint::binomial(n, k).to_string() == binomial_by_pascal(n, k).to_string());
    }
}

TEST_CASE("decimal printing") {
    CHECK(BigUint().to_string() == "0");
    CHECK(BigUint(1).to_string() == "1");
    CHECK(BigUint(999999999999ull).to_string() == "999999999999");
    BigUint b(1);
    for (int i = 0; i < 64; ++i) b.mul_u32(2);
    CHECK(b.to_string() == "18446744073709551616");  // 2^64
    CHECK(b.bit_length() == 65);
}

TEST_CASE("exact division round trips multiplication") {
    BigUint b(123456789);
    b.mul_u32(1000003);
    b.mul_u32(999983);
    BigUint copy = b;
    copy.div_exact_u32(999983);
    copy.div_exact_u32(1000003);
    CHECK(copy.to_u64() == 123456789);
    CHECK_THROWS(b.div_exact_u32(7));  // 7 does not divide it
}

TEST_CASE("comparison orders by value") {
    CHECK(BigUint(5) < BigUint(6));
    CHECK(BigUint::binomial(50, 25) < BigUint::binomial(52, 26));
    CHECK(BigUint(7) == BigUint(7));
}
