#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "netgrowth/errors.hpp"

namespace netgrowth {

// Unsigned arbitrary-precision integer, base 2^32 little-endian limbs.
// Only the operations the counting code needs: multiply / exact-divide by a
// 32-bit value, compare, decimal rendering, and a natural log.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t value) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffULL));
        const auto high = static_cast<std::uint32_t>(value >> 32);
        if (high != 0) {
            limbs_.push_back(high);
        }
    }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    void multiply(std::uint32_t factor) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            const std::uint64_t product =
                static_cast<std::uint64_t>(limb) * factor + carry;
            limb = static_cast<std::uint32_t>(product & 0xffffffffULL);
            carry = product >> 32;
        }
        if (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry));
        }
    }

    // Divides in place and returns the remainder.
    std::uint32_t divide(std::uint32_t divisor) {
        if (divisor == 0) {
            throw DivisionByZero("BigUint: division by zero");
        }
        std::uint64_t remainder = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const std::uint64_t cur = (remainder << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
            remainder = cur % divisor;
        }
        trim();
        return static_cast<std::uint32_t>(remainder);
    }

    friend bool operator==(const BigUint& a, const BigUint& b) {
        return a.limbs_ == b.limbs_;
    }

    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        BigUint scratch = *this;
        std::string digits;
        while (!scratch.is_zero()) {
            const std::uint32_t chunk = scratch.divide(1000000000u);
            std::string part = std::to_string(chunk);
            if (!scratch.is_zero()) {
                part.insert(0, 9 - part.size(), '0');
            }
            digits.insert(0, part);
        }
        return digits;
    }

    // ln of the value; uses the top 96 bits plus the binary magnitude,
    // accurate to double precision for any size.
    double log_natural() const {
        if (is_zero()) {
            throw DegenerateInput("BigUint: log of zero");
        }
        double mantissa = 0.0;
        int taken = 0;
        std::size_t i = limbs_.size();
        while (i-- > 0 && taken < 3) {
            mantissa = mantissa * 4294967296.0 + static_cast<double>(limbs_[i]);
            ++taken;
        }
        const double skipped_limbs =
            static_cast<double>(limbs_.size() - static_cast<std::size_t>(taken));
        return std::log(mantissa) + skipped_limbs * 32.0 * std::log(2.0);
    }

    // Exact double when the value fits; for range checks in callers/tests.
    double to_double() const {
        double out = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            out = out * 4294967296.0 + static_cast<double>(limbs_[i]);
        }
        return out;
    }

private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) {
            limbs_.pop_back();
        }
    }

    std::vector<std::uint32_t> limbs_;
};

} // namespace netgrowth
