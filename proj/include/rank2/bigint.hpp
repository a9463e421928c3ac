#ifndef RANK2_BIGINT_HPP
#define RANK2_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rank2 {

// Arbitrary-precision unsigned integer, little-endian base 2^32 limbs.
// Covers exactly what the combinatorial checks need: products of prime
// powers and binomial coefficients with tens of thousands of bits.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    static BigUint binomial(std::uint32_t n, std::uint32_t k);

    BigUint& mul_u32(std::uint32_t m);
    // Divides in place, asserts the division is exact.
    BigUint& div_exact_u32(std::uint32_t d);
    BigUint& add(const BigUint& other);

    // -1, 0, 1
    int compare(const BigUint& other) const;
    bool operator==(const BigUint& other) const { return compare(other) == 0; }
    bool operator<(const BigUint& other) const { return compare(other) < 0; }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;
    std::string to_string() const;
    std::size_t bit_length() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace rank2

#endif
