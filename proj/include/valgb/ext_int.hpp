#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

#include "valgb/error.hpp"

namespace valgb {

/// An integer extended by +infinity, the codomain of every valuation.
/// Infinity absorbs addition and is the maximum of the order.
class ExtInt {
public:
    constexpr ExtInt() = default;  // +infinity
    constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtInt infinity() { return ExtInt{}; }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    std::int64_t value() const {
        if (!value_) throw DomainError("ExtInt: value() of infinity");
        return *value_;
    }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (!a.value_ || !b.value_) return infinity();
        return ExtInt(*a.value_ + *b.value_);
    }

    ExtInt& operator+=(ExtInt other) { return *this = *this + other; }

    friend constexpr bool operator==(ExtInt a, ExtInt b) = default;

    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
        if (!a.value_) return b.value_ ? std::strong_ordering::greater : std::strong_ordering::equal;
        if (!b.value_) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, ExtInt v) {
        if (v.is_infinite()) return os << "inf";
        return os << *v.value_;
    }

private:
    std::optional<std::int64_t> value_;
};

inline ExtInt min(ExtInt a, ExtInt b) { return std::min(a, b); }

}  // namespace valgb
