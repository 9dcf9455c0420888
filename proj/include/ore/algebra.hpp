#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ore/error.hpp"
#include "ore/matrix.hpp"
#include "ore/rational.hpp"

namespace ore {

/// Coordinates of an element of a finite-dimensional algebra in its basis.
/// Zero is stored without coordinates, so zero padding in polynomials costs
/// no allocation; a nonzero element always holds all dim() coordinates.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(std::size_t dim) : dim_(dim) {}
    explicit AlgElem(RatVector coords) : dim_(coords.size()), coords_(std::move(coords)) { normalize(); }

    std::size_t dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return coords_.empty(); }

    const Rat& operator[](std::size_t i) const {
        static const Rat zero;
        return coords_.empty() ? zero : coords_[i];
    }

    /// All dim() coordinates.
    RatVector coords() const { return coords_.empty() ? RatVector(dim_) : coords_; }

    void set(std::size_t i, Rat value) {
        if (i >= dim_) throw PreconditionError("coordinate index out of range");
        if (coords_.empty()) {
            if (value.is_zero()) return;
            coords_.resize(dim_);
        }
        coords_[i] = std::move(value);
        normalize();
    }

    AlgElem& operator+=(const AlgElem& o) { return combine(o, false); }
    AlgElem& operator-=(const AlgElem& o) { return combine(o, true); }
    AlgElem& operator*=(const Rat& s) {
        if (s.is_zero()) {
            coords_.clear();
            return *this;
        }
        if (s.is_one()) return *this;
        for (auto& c : coords_)
            if (!c.is_zero()) c *= s;
        return *this;
    }

    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const Rat& s, AlgElem a) { return a *= s; }
    AlgElem operator-() const {
        AlgElem r = *this;
        for (auto& c : r.coords_)
            if (!c.is_zero()) c = -c;
        return r;
    }

    friend bool operator==(const AlgElem&, const AlgElem&) = default;

private:
    AlgElem& combine(const AlgElem& o, bool subtract) {
        if (o.dim_ != dim_) throw PreconditionError("algebra element dimension mismatch");
        if (o.coords_.empty()) return *this;
        if (coords_.empty()) {
            coords_ = o.coords_;
            if (subtract)
                for (auto& c : coords_)
                    if (!c.is_zero()) c = -c;
            return *this;
        }
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (o.coords_[i].is_zero()) continue;
            if (subtract)
                coords_[i] -= o.coords_[i];
            else
                coords_[i] += o.coords_[i];
        }
        normalize();
        return *this;
    }

    void normalize() {
        for (const auto& c : coords_)
            if (!c.is_zero()) return;
        coords_.clear();
    }

    std::size_t dim_ = 0;
    RatVector coords_;
};

/**
 * A finite-dimensional unital algebra over Q given by structure constants:
 * e_i * e_j = sum_k c[i][j][k] e_k.
 *
 * Specs built by the Cayley-Dickson chain starting at rationals() also carry
 * their conjugation (a diagonal map in the standard basis), which is what
 * cayley_dickson_double needs. User-supplied specs are only checked for the
 * unit law; associativity and division are not assumed.
 */
class AlgebraSpec {
public:
    AlgebraSpec(std::vector<std::string> names, std::size_t unit_index, RatVector constants,
                std::optional<RatVector> conjugation = std::nullopt, std::string label = "custom")
        : names_(std::move(names)),
          unit_(unit_index),
          constants_(std::move(constants)),
          conjugation_(std::move(conjugation)),
          label_(std::move(label)) {
        const std::size_t d = names_.size();
        if (d == 0) throw PreconditionError("algebra must have positive dimension");
        if (constants_.size() != d * d * d)
            throw PreconditionError("structure constants must have dim^3 entries");
        if (unit_ >= d) throw PreconditionError("unit index out of range");
        if (conjugation_ && conjugation_->size() != d)
            throw PreconditionError("conjugation must have dim entries");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (names_[i] == names_[j]) throw PreconditionError("duplicate basis name " + names_[i]);

        table_.resize(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    if (const Rat& c = constant(i, j, k); !c.is_zero()) table_[i * d + j].emplace_back(k, c);

        for (std::size_t j = 0; j < d; ++j) {
            if (mul(basis(unit_), basis(j)) != basis(j) || mul(basis(j), basis(unit_)) != basis(j))
                throw PreconditionError("basis element " + names_[unit_] + " is not a two-sided unit");
        }
    }

    static AlgebraSpec rationals() { return AlgebraSpec({"e0"}, 0, {Rat(1)}, RatVector{Rat(1)}, "rationals"); }
    static AlgebraSpec complexes();
    static AlgebraSpec quaternions();
    static AlgebraSpec octonions();

    std::size_t dim() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t unit_index() const noexcept { return unit_; }
    const std::string& label() const noexcept { return label_; }
    const RatVector& constants() const noexcept { return constants_; }
    const Rat& constant(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t d = dim();
        return constants_[(i * d + j) * d + k];
    }
    const std::optional<RatVector>& conjugation() const noexcept { return conjugation_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    AlgElem zero() const { return AlgElem(dim()); }
    AlgElem basis(std::size_t i) const {
        if (i >= dim()) throw PreconditionError("basis index out of range");
        AlgElem e(dim());
        e.set(i, Rat(1));
        return e;
    }
    AlgElem unit() const { return basis(unit_); }
    AlgElem scalar(const Rat& r) const {
        AlgElem e(dim());
        e.set(unit_, r);
        return e;
    }

    /// r when a == r * unit.
    std::optional<Rat> as_scalar(const AlgElem& a) const {
        check(a);
        for (std::size_t i = 0; i < dim(); ++i)
            if (i != unit_ && !a[i].is_zero()) return std::nullopt;
        return a[unit_];
    }

    AlgElem mul(const AlgElem& a, const AlgElem& b) const {
        check(a);
        check(b);
        if (a.is_zero() || b.is_zero()) return zero();
        const std::size_t d = dim();
        RatVector out(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b[j].is_zero()) continue;
                const auto& entries = table_[i * d + j];
                if (entries.empty()) continue;
                const Rat ab = a[i] * b[j];
                for (const auto& [k, c] : entries) out[k] += c.is_one() ? ab : ab * c;
            }
        }
        return AlgElem(std::move(out));
    }

    /// (ab)c - a(bc)
    AlgElem associator(const AlgElem& a, const AlgElem& b, const AlgElem& c) const {
        return mul(mul(a, b), c) - mul(a, mul(b, c));
    }

    /// ab - ba
    AlgElem commutator(const AlgElem& a, const AlgElem& b) const { return mul(a, b) - mul(b, a); }

    AlgElem conjugate(const AlgElem& a) const {
        check(a);
        if (!conjugation_) throw PreconditionError("algebra '" + label_ + "' has no known conjugation");
        RatVector out(dim());
        for (std::size_t i = 0; i < dim(); ++i) out[i] = (*conjugation_)[i] * a[i];
        return AlgElem(std::move(out));
    }

    /// Sum of squared coordinates.
    Rat norm(const AlgElem& a) const {
        check(a);
        Rat n;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) n += a[i] * a[i];
        return n;
    }

    bool is_associative() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!associator(basis(i), basis(j), basis(k)).is_zero()) return false;
        return true;
    }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
        return a.names_ == b.names_ && a.unit_ == b.unit_ && a.constants_ == b.constants_;
    }

private:
    void check(const AlgElem& a) const {
        if (a.dim() != dim())
            throw PreconditionError("element of dimension " + std::to_string(a.dim()) +
                                    " used with algebra of dimension " + std::to_string(dim()));
    }

    std::vector<std::string> names_;
    std::size_t unit_;
    RatVector constants_;
    std::optional<RatVector> conjugation_;
    std::string label_;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> table_;
};

/**
 * Cayley-Dickson doubling. Elements of the result are pairs (a, b) of the
 * input algebra, with basis e_i = (e_i, 0) and e_{d+i} = (0, e_i), and
 *
 *     (a, b)(c, d) = (ac - d* b, d a + b c*),   (a, b)* = (a*, -b).
 */
inline AlgebraSpec cayley_dickson_double(const AlgebraSpec& base, std::string label = "") {
    if (!base.conjugation())
        throw PreconditionError("cayley_dickson_double needs a conjugation; '" + base.label() +
                                "' was not produced by the doubling chain");
    if (base.unit_index() != 0) throw PreconditionError("doubling chain expects the unit at index 0");
    const std::size_t d = base.dim();
    const std::size_t n = 2 * d;

    auto half = [&](std::size_t idx) -> std::pair<AlgElem, AlgElem> {
        if (idx < d) return {base.basis(idx), base.zero()};
        return {base.zero(), base.basis(idx - d)};
    };

    RatVector constants(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = half(i);
        for (std::size_t j = 0; j < n; ++j) {
            const auto [c, dd] = half(j);
            const AlgElem first = base.mul(a, c) - base.mul(base.conjugate(dd), b);
            const AlgElem second = base.mul(dd, a) + base.mul(b, base.conjugate(c));
            for (std::size_t k = 0; k < d; ++k) {
                constants[(i * n + j) * n + k] = first[k];
                constants[(i * n + j) * n + d + k] = second[k];
            }
        }
    }

    RatVector conj(n);
    for (std::size_t k = 0; k < d; ++k) {
        conj[k] = (*base.conjugation())[k];
        conj[d + k] = Rat(-1);
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("e" + std::to_string(k));
    if (label.empty()) label = "double(" + base.label() + ")";
    return AlgebraSpec(std::move(names), 0, std::move(constants), std::move(conj), std::move(label));
}

inline AlgebraSpec AlgebraSpec::complexes() { return cayley_dickson_double(rationals(), "complexes"); }
inline AlgebraSpec AlgebraSpec::quaternions() { return cayley_dickson_double(complexes(), "quaternions"); }
inline AlgebraSpec AlgebraSpec::octonions() { return cayley_dickson_double(quaternions(), "octonions"); }

}  // namespace ore
