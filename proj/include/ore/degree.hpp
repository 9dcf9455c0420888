#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "ore/error.hpp"

namespace ore {

/// An integer degree extended by -infinity, the degree of zero.
class Degree {
public:
    constexpr Degree() noexcept = default;  // -infinity
    constexpr Degree(std::int64_t value) noexcept : value_(value), finite_(true) {}  // NOLINT

    static constexpr Degree neg_infinity() noexcept { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return !finite_; }
    constexpr bool is_finite() const noexcept { return finite_; }

    std::int64_t value() const {
        if (!finite_) throw PreconditionError("degree of zero is -infinity");
        return value_;
    }

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }
    friend std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.str(); }

private:
    std::int64_t value_ = 0;
    bool finite_ = false;
};

inline Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }

}  // namespace ore
