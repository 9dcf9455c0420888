#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ore/algebra.hpp"
#include "ore/degree.hpp"
#include "ore/error.hpp"
#include "ore/random.hpp"

namespace ore {

/// Polynomial in a central variable y with coefficients in an algebra A.
/// Dense, trailing zero coefficients trimmed; the zero polynomial has no
/// coefficients.
class CoeffPoly {
public:
    explicit CoeffPoly(std::size_t dim) : dim_(dim) {}
    CoeffPoly(std::size_t dim, std::vector<AlgElem> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c.dim() != dim_) throw PreconditionError("coefficient dimension mismatch");
        trim();
    }

    /// c * y^power
    static CoeffPoly monomial(const AlgElem& c, std::size_t power) {
        std::vector<AlgElem> coeffs(power + 1, AlgElem(c.dim()));
        coeffs[power] = c;
        return CoeffPoly(c.dim(), std::move(coeffs));
    }
    static CoeffPoly constant(const AlgElem& c) { return monomial(c, 0); }

    std::size_t dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree ydeg() const noexcept {
        return coeffs_.empty() ? Degree::neg_infinity() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
    }
    const std::vector<AlgElem>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of y^j (zero beyond the degree).
    AlgElem coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : AlgElem(dim_); }
    const AlgElem& leading() const {
        if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// Every coefficient is a rational multiple of the unit.
    bool is_scalar(const AlgebraSpec& spec) const {
        for (const auto& c : coeffs_)
            if (!spec.as_scalar(c)) return false;
        return true;
    }

    CoeffPoly& operator+=(const CoeffPoly& o) {
        check(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), AlgElem(dim_));
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        trim();
        return *this;
    }
    CoeffPoly& operator-=(const CoeffPoly& o) {
        check(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), AlgElem(dim_));
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        trim();
        return *this;
    }
    CoeffPoly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const Rat& s, CoeffPoly a) { return a *= s; }
    CoeffPoly operator-() const {
        CoeffPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    /// Multiplication by y^k.
    CoeffPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<AlgElem> out(k, AlgElem(dim_));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return CoeffPoly(dim_, std::move(out));
    }

    /// Formal derivative d/dy.
    CoeffPoly derivative() const {
        std::vector<AlgElem> out;
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            out.push_back(Rat(static_cast<std::int64_t>(j)) * coeffs_[j]);
        return CoeffPoly(dim_, std::move(out));
    }

    friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

private:
    void check(const CoeffPoly& o) const {
        if (o.dim_ != dim_) throw PreconditionError("polynomial coefficient algebras differ");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::size_t dim_;
    std::vector<AlgElem> coeffs_;
};

/// Product in A[y]; y commutes with everything, so this is the convolution
/// of coefficient products.
inline CoeffPoly poly_mul(const AlgebraSpec& spec, const CoeffPoly& p, const CoeffPoly& q) {
    if (p.dim() != spec.dim() || q.dim() != spec.dim())
        throw PreconditionError("poly_mul: coefficient algebra mismatch");
    if (p.is_zero() || q.is_zero()) return CoeffPoly(spec.dim());
    std::vector<AlgElem> out(p.size() + q.size() - 1, spec.zero());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const AlgElem& a = p.coeffs()[i];
        if (a.is_zero()) continue;
        const std::optional<Rat> scalar = spec.as_scalar(a);
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (q.coeffs()[j].is_zero()) continue;
            if (scalar)
                out[i + j] += *scalar * q.coeffs()[j];
            else
                out[i + j] += spec.mul(a, q.coeffs()[j]);
        }
    }
    return CoeffPoly(spec.dim(), std::move(out));
}

/// Product of p with a polynomial whose coefficients are rational multiples
/// of the unit (given by those rationals). Such a factor is central.
inline CoeffPoly scalar_poly_mul(const CoeffPoly& p, const RatVector& scalar_poly) {
    if (p.is_zero() || scalar_poly.empty()) return CoeffPoly(p.dim());
    std::vector<AlgElem> out(p.size() + scalar_poly.size() - 1, AlgElem(p.dim()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < scalar_poly.size(); ++j) {
            if (scalar_poly[j].is_zero()) continue;
            out[i + j] += scalar_poly[j] * p.coeffs()[i];
        }
    }
    return CoeffPoly(p.dim(), std::move(out));
}

/// Random element with small rational coordinates; each coordinate is
/// nonzero with the given probability (percent).
inline AlgElem random_alg_elem(Rng& rng, const AlgebraSpec& spec, int density = 60) {
    AlgElem e(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i)
        if (rng.chance(density)) e.set(i, rng.rational(5, 3));
    return e;
}

/// Random polynomial of y-degree at most max_deg.
inline CoeffPoly random_coeff_poly(Rng& rng, const AlgebraSpec& spec, std::size_t max_deg, int density = 60) {
    std::vector<AlgElem> coeffs;
    const auto deg = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(max_deg)));
    for (std::size_t j = 0; j <= deg; ++j) coeffs.push_back(random_alg_elem(rng, spec, density));
    return CoeffPoly(spec.dim(), std::move(coeffs));
}

}  // namespace ore
