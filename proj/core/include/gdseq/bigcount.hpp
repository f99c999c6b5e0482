#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdseq {

/// Exact nonnegative integer of unbounded size.
///
/// Every count in the library (partition counts, degree-sequence counts,
/// allocation sizes) is carried as a BigCount. Subtraction that would go
/// negative throws std::domain_error instead of wrapping.
class BigCount {
public:
    using Storage = boost::multiprecision::cpp_int;

    BigCount() = default;
    BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    /// Little-endian 64-bit limbs, least significant first.
    static BigCount from_limbs(std::span<const std::uint64_t> limbs);
    /// Parses a decimal string of digits; throws std::invalid_argument.
    static BigCount from_string(std::string_view digits);

    std::string to_string() const;
    std::size_t bit_length() const;
    bool is_zero() const { return value_.is_zero(); }
    bool is_odd() const { return bit_test(value_, 0); }
    /// log2 of the value; -inf for zero.
    double log2() const;
    double to_double() const { return value_.convert_to<double>(); }
    /// Throws std::overflow_error when the value does not fit.
    std::uint64_t to_u64() const;

    BigCount& operator+=(const BigCount& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    BigCount& operator-=(const BigCount& rhs);
    BigCount& operator*=(const BigCount& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    /// Floor division; throws std::domain_error on a zero divisor.
    BigCount& operator/=(const BigCount& rhs);
    BigCount& operator%=(const BigCount& rhs);

    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
    friend BigCount operator/(BigCount a, const BigCount& b) { return a /= b; }
    friend BigCount operator%(BigCount a, const BigCount& b) { return a %= b; }

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const Storage& raw() const { return value_; }

private:
    explicit BigCount(Storage v) : value_(std::move(v)) {}

    Storage value_;
};

std::ostream& operator<<(std::ostream& os, const BigCount& v);

}  // namespace gdseq
