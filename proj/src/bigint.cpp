#include "rank2/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace rank2 {

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul_u32(std::uint32_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::div_exact_u32(std::uint32_t d) {
    assert(d != 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("BigUint::div_exact_u32: inexact division");
    trim();
    return *this;
}

BigUint& BigUint::add(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = carry + limbs_[i];
        if (i < other.limbs_.size()) cur += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int j = 0; j < 9; ++j) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    return std::string(digits.rbegin(), digits.rend());
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigUint BigUint::binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint result(1);
    // C(n,k) = prod_{i=1..k} (n-k+i)/i, exact at every step.
    for (std::uint32_t i = 1; i <= k; ++i) {
        result.mul_u32(n - k + i);
        result.div_exact_u32(i);
    }
    return result;
}

}  // namespace rank2
