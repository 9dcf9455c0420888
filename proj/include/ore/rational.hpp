#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "ore/error.hpp"

namespace ore {

/**
 * Exact rational number in lowest terms with a positive denominator.
 *
 * Values whose numerator and denominator fit in 63 bits are kept inline;
 * anything larger spills into a GMP rational. The two representations are
 * canonical: a value is stored big iff it does not fit inline, so equality
 * never has to compare across representations. Big values are immutable and
 * shared between copies.
 */
class Rat {
public:
    Rat() noexcept = default;
    Rat(std::int64_t value) {  // NOLINT(google-explicit-constructor)
        if (value == std::numeric_limits<std::int64_t>::min()) {
            big_ = std::make_shared<const mpq_class>(mpz_class(std::to_string(value)));
        } else {
            num_ = value;
        }
    }
    Rat(std::int64_t num, std::int64_t den) {
        if (den == 0) throw PreconditionError("rational with zero denominator");
        *this = from_wide(static_cast<Wide>(num), static_cast<Wide>(den));
    }
    explicit Rat(const mpq_class& q) { assign_canonical(mpq_class(q)); }

    /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
    static Rat parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s.empty()) throw PreconditionError("empty rational literal");
        const auto slash = s.find('/');
        auto valid_int = [](std::string_view digits) {
            if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
                digits.remove_prefix(1);
            if (digits.empty()) return false;
            for (char c : digits)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const std::string num_part = s.substr(0, slash);
        const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num_part) || !valid_int(den_part))
            throw PreconditionError("malformed rational literal '" + std::string(text) + "'");
        mpz_class num(num_part.front() == '+' ? num_part.substr(1) : num_part);
        mpz_class den(den_part.front() == '+' ? den_part.substr(1) : den_part);
        if (den == 0) throw PreconditionError("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
    }
    mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }
    mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

    /// "p/q", or "p" for integers.
    std::string str() const {
        if (big_) return big_->get_str();
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rat operator-() const {
        if (big_) return Rat(mpq_class(-*big_));
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat inverse() const {
        if (is_zero()) throw PreconditionError("division by zero");
        if (big_) return Rat(mpq_class(1 / *big_));
        Rat r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t r;
                if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Rat(r);
            }
            return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
        }
        return Rat(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t r;
                if (!__builtin_sub_overflow(a.num_, b.num_, &r)) return Rat(r);
            }
            return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
        }
        return Rat(mpq_class(a.to_mpq() - b.to_mpq()));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0) return Rat();
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t r;
                if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Rat(r);
            }
            return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
        }
        return Rat(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            const Wide lhs = Wide(a.num_) * b.den_;
            const Wide rhs = Wide(b.num_) * a.den_;
            return lhs <=> rhs;
        }
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    using Wide = __int128;
    using UWide = unsigned __int128;

    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    static mpz_class mpz_from_i64(std::int64_t v) {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        return z;
    }

    static mpz_class mpz_from_wide(Wide v) {
        const bool negative = v < 0;
        UWide mag = negative ? UWide(0) - UWide(v) : UWide(v);
        mpz_class z;
        mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(mag >> 64));
        z <<= 64;
        z += mpz_class(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
        return negative ? mpz_class(-z) : z;
    }

    static UWide gcd_wide(UWide a, UWide b) {
        while (b != 0) {
            if ((a >> 64) == 0 && (b >> 64) == 0)
                return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
            UWide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    // num/den with den != 0, any signs.
    static Rat from_wide(Wide num, Wide den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) return Rat();
        const UWide mag = num < 0 ? UWide(0) - UWide(num) : UWide(num);
        const UWide g = gcd_wide(mag, UWide(den));
        const UWide rn = mag / g;
        const UWide rd = UWide(den) / g;
        if (rn <= UWide(kMax) && rd <= UWide(kMax)) {
            Rat r;
            r.num_ = num < 0 ? -static_cast<std::int64_t>(rn) : static_cast<std::int64_t>(rn);
            r.den_ = static_cast<std::int64_t>(rd);
            return r;
        }
        mpq_class q(mpz_from_wide(num < 0 ? -Wide(rn) : Wide(rn)), mpz_from_wide(Wide(rd)));
        Rat r;
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
        return r;
    }

    void assign_canonical(mpq_class q) {
        q.canonicalize();
        const auto& n = q.get_num();
        const auto& d = q.get_den();
        if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
            num_ = n.get_si();
            den_ = d.get_si();
            big_.reset();
        } else {
            big_ = std::make_shared<const mpq_class>(std::move(q));
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;  // immutable once built
};

}  // namespace ore
