#include "gdseq/bigcount.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace gdseq {

BigCount BigCount::from_limbs(std::span<const std::uint64_t> limbs) {
    Storage v;
    if (!limbs.empty()) {
        import_bits(v, limbs.begin(), limbs.end(), 64, false);
    }
    return BigCount(std::move(v));
}

BigCount BigCount::from_string(std::string_view digits) {
    if (digits.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    Storage v;
    for (const char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a nonnegative decimal integer: " + std::string(digits));
        }
        v *= 10;
        v += static_cast<unsigned>(c - '0');
    }
    return BigCount(std::move(v));
}

std::string BigCount::to_string() const { return value_.str(); }

std::size_t BigCount::bit_length() const {
    if (value_.is_zero()) {
        return 0;
    }
    return msb(value_) + 1;
}

double BigCount::log2() const {
    if (value_.is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    // Keep 64 significant bits; the remaining shift is exact in the exponent.
    const std::size_t bits = bit_length();
    if (bits <= 64) {
        return std::log2(value_.convert_to<double>());
    }
    const std::size_t shift = bits - 64;
    const Storage top = value_ >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

std::uint64_t BigCount::to_u64() const {
    if (bit_length() > 64) {
        throw std::overflow_error("BigCount does not fit in 64 bits");
    }
    return value_.convert_to<std::uint64_t>();
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
    if (value_ < rhs.value_) {
        throw std::domain_error("BigCount subtraction would be negative");
    }
    value_ -= rhs.value_;
    return *this;
}

BigCount& BigCount::operator/=(const BigCount& rhs) {
    if (rhs.value_.is_zero()) {
        throw std::domain_error("BigCount division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

BigCount& BigCount::operator%=(const BigCount& rhs) {
    if (rhs.value_.is_zero()) {
        throw std::domain_error("BigCount division by zero");
    }
    value_ %= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigCount& v) { return os << v.to_string(); }

}  // namespace gdseq
