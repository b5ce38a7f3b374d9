// Minimal arbitrary-precision signed integer: just enough arithmetic for
// fraction-free Gaussian elimination (add, subtract, multiply, exact divide).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmt {

class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {  // NOLINT(google-explicit-constructor)
        negative_ = v < 0;
        std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        while (mag) {
            limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
            mag >>= 32;
        }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.negative_ = a.negative_ != b.negative_;
        return r;
    }

    // Exact quotient; throws if the division leaves a remainder or d == 0.
    BigInt divexact(const BigInt& d) const {
        if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (is_zero()) return BigInt();
        int c = cmp_mag(limbs_, d.limbs_);
        if (c < 0) throw std::domain_error("BigInt: division is not exact");
        // binary long division on magnitudes
        BigInt quotient, remainder;
        const int total_bits = static_cast<int>(limbs_.size()) * 32;
        quotient.limbs_.assign(limbs_.size(), 0);
        for (int bit = total_bits - 1; bit >= 0; --bit) {
            remainder.shift_left_one();
            if (limbs_[static_cast<std::size_t>(bit / 32)] >> (bit % 32) & 1u) remainder.set_low_bit();
            if (cmp_mag(remainder.limbs_, d.limbs_) >= 0) {
                remainder.limbs_ = sub_mag(remainder.limbs_, d.limbs_);
                quotient.limbs_[static_cast<std::size_t>(bit / 32)] |= 1u << (bit % 32);
            }
        }
        if (!remainder.is_zero()) throw std::domain_error("BigInt: division is not exact");
        quotient.trim();
        quotient.negative_ = negative_ != d.negative_ && !quotient.is_zero();
        return quotient;
    }

    // Lossy only if the value does not fit; callers check fits_int64 first.
    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        std::uint64_t mag = magnitude_u64();
        if (negative_) return mag <= 0x8000000000000000ull;
        return mag <= 0x7fffffffffffffffull;
    }

    std::int64_t to_int64() const {
        std::uint64_t mag = magnitude_u64();
        return negative_ ? -static_cast<std::int64_t>(mag - 1) - 1 : static_cast<std::int64_t>(mag);
    }

    std::string str() const {
        if (is_zero()) return "0";
        // repeated division by 10^9
        std::vector<std::uint32_t> mag = limbs_;
        std::string out;
        while (!mag.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = mag.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!mag.empty() && mag.back() == 0) mag.pop_back();
            std::string chunk = std::to_string(rem);
            if (!mag.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return negative_ ? "-" + out : out;
    }

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, base 2^32, no leading zeros

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    std::uint64_t magnitude_u64() const {
        std::uint64_t mag = 0;
        if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) mag |= limbs_[0];
        return mag;
    }

    void shift_left_one() {
        std::uint32_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }

    void set_low_bit() {
        if (limbs_.empty()) limbs_.push_back(1);
        else limbs_[0] |= 1u;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> out = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(out[i]) + carry +
                                (i < small.size() ? small[i] : 0u);
            out[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) out.push_back(static_cast<std::uint32_t>(carry));
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(out[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += std::int64_t{1} << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
};

}  // namespace cmt
