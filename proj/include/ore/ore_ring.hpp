#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ore/algebra.hpp"
#include "ore/coeff_poly.hpp"
#include "ore/degree.hpp"
#include "ore/error.hpp"
#include "ore/random.hpp"
#include "ore/sigma_delta.hpp"

namespace ore {

namespace detail {

/// Pascal's triangle rows 0..n.
inline std::vector<std::vector<Rat>> binomial_rows(std::size_t n) {
    std::vector<std::vector<Rat>> rows{{Rat(1)}};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Rat> next(m + 1, Rat(1));
        for (std::size_t i = 1; i < m; ++i) next[i] = rows[m - 1][i - 1] + rows[m - 1][i];
        rows.push_back(std::move(next));
    }
    return rows;
}

}  // namespace detail

class OreContext;
using ContextPtr = std::shared_ptr<const OreContext>;

/**
 * The data defining S = R[x; sigma, delta] with R = A[y].
 *
 * Contexts are created through create() (or a preset), which rejects a
 * delta that fails the sigma-Leibniz identity on seeded samples. Elements
 * hold a shared pointer to their context; two elements are compatible only
 * when they share the same context object.
 */
class OreContext {
public:
    static constexpr std::size_t kDefaultVerifySamples = 12;

    static ContextPtr create(AlgebraSpec algebra, SigmaSpec sigma, DeltaSpec delta, std::string name = "custom",
                             std::size_t verify_samples = kDefaultVerifySamples, std::uint64_t seed = 0) {
        if (delta.mode() == DeltaSpec::Mode::d_dy && !sigma.is_identity())
            throw PreconditionError("d/dy requires sigma = identity");
        if (delta.mode() == DeltaSpec::Mode::sigma_twisted && delta.delta_of_y().dim() != algebra.dim())
            throw PreconditionError("delta(y) has coefficients in a different algebra");
        if (!verify_sigma_derivation(algebra, sigma, delta, verify_samples, seed))
            throw PreconditionError("delta is not a sigma-derivation of A[y]");
        return ContextPtr(new OreContext(std::move(algebra), std::move(sigma), std::move(delta), std::move(name)));
    }

    /// Q[y][x; id, d/dy], the first Weyl algebra.
    static ContextPtr diff_rat() {
        return create(AlgebraSpec::rationals(), SigmaSpec::identity(), DeltaSpec::d_dy(), "diff-rat");
    }
    /// O[y][x; id, d/dy] with O the Cayley-Dickson octonions.
    static ContextPtr diff_oct() {
        return create(AlgebraSpec::octonions(), SigmaSpec::identity(), DeltaSpec::d_dy(), "diff-oct");
    }
    /// O[y][x; sigma, delta] with sigma(y) given by rational coefficients and
    /// delta twisted from delta(y), which must also be rational.
    static ContextPtr subst_oct(RatVector sigma_of_y, const RatVector& delta_of_y) {
        const AlgebraSpec oct = AlgebraSpec::octonions();
        std::vector<AlgElem> dy;
        for (const auto& r : delta_of_y) dy.push_back(oct.scalar(r));
        return create(oct, SigmaSpec::substitution(std::move(sigma_of_y)),
                      DeltaSpec::sigma_twisted(CoeffPoly(oct.dim(), std::move(dy))), "subst-oct");
    }

    const AlgebraSpec& algebra() const noexcept { return algebra_; }
    const SigmaSpec& sigma() const noexcept { return sigma_; }
    const DeltaSpec& delta() const noexcept { return delta_; }
    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return algebra_.dim(); }

    CoeffPoly apply_sigma(const CoeffPoly& p) const { return ore::apply_sigma(sigma_, p); }
    CoeffPoly apply_delta(const CoeffPoly& p) const { return ore::apply_delta(algebra_, delta_, sigma_, p); }

    /// rows[m][i] = pi^m_i(r) for 0 <= i <= m <= max_m, where
    /// x^m r = sum_i pi^m_i(r) x^i.
    std::vector<std::vector<CoeffPoly>> pi_triangle(const CoeffPoly& r, std::size_t max_m) const {
        std::vector<std::vector<CoeffPoly>> rows;
        rows.reserve(max_m + 1);
        if (sigma_.is_identity()) {
            // pi^m_i = C(m, i) delta^{m-i}
            std::vector<CoeffPoly> powers{r};
            for (std::size_t t = 1; t <= max_m && !powers.back().is_zero(); ++t)
                powers.push_back(apply_delta(powers.back()));
            const auto binom = detail::binomial_rows(max_m);
            for (std::size_t m = 0; m <= max_m; ++m) {
                std::vector<CoeffPoly> row(m + 1, CoeffPoly(dim()));
                for (std::size_t i = 0; i <= m; ++i) {
                    const std::size_t t = m - i;
                    if (t < powers.size() && !powers[t].is_zero()) row[i] = binom[m][i] * powers[t];
                }
                rows.push_back(std::move(row));
            }
            return rows;
        }
        rows.push_back({r});
        const bool no_delta = delta_.mode() == DeltaSpec::Mode::zero;
        for (std::size_t m = 1; m <= max_m; ++m) {
            const auto& prev = rows.back();
            std::vector<CoeffPoly> next(m + 1, CoeffPoly(dim()));
            for (std::size_t i = 0; i < prev.size(); ++i) {
                if (prev[i].is_zero()) continue;
                next[i + 1] += apply_sigma(prev[i]);
                if (!no_delta) next[i] += apply_delta(prev[i]);
            }
            rows.push_back(std::move(next));
        }
        return rows;
    }

private:
    OreContext(AlgebraSpec algebra, SigmaSpec sigma, DeltaSpec delta, std::string name)
        : algebra_(std::move(algebra)), sigma_(std::move(sigma)), delta_(std::move(delta)), name_(std::move(name)) {}

    AlgebraSpec algebra_;
    SigmaSpec sigma_;
    DeltaSpec delta_;
    std::string name_;
};

/// Sum over all interleavings of i applications of sigma and m - i of
/// delta, applied to r: the coefficient of x^i in x^m r.
inline CoeffPoly pi_map(const OreContext& ctx, std::size_t m, std::size_t i, const CoeffPoly& r) {
    if (i > m) throw PreconditionError("pi_map: index i exceeds m");
    return ctx.pi_triangle(r, m)[m][i];
}

/// Element sum_k a_k x^k of S with a_k in A[y].
class OreElem {
public:
    explicit OreElem(ContextPtr ctx) : ctx_(std::move(ctx)) { require_ctx(); }
    OreElem(ContextPtr ctx, std::vector<CoeffPoly> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
        require_ctx();
        for (const auto& c : coeffs_)
            if (c.dim() != ctx_->dim()) throw PreconditionError("coefficient dimension does not match context");
        trim();
    }

    static OreElem zero(const ContextPtr& ctx) { return OreElem(ctx); }
    static OreElem one(const ContextPtr& ctx) { return scalar(ctx, Rat(1)); }
    static OreElem scalar(const ContextPtr& ctx, const Rat& r) { return constant(ctx, ctx->algebra().scalar(r)); }
    static OreElem constant(const ContextPtr& ctx, const AlgElem& c) { return monomial(ctx, c, 0, 0); }
    static OreElem x(const ContextPtr& ctx) { return monomial(ctx, ctx->algebra().unit(), 0, 1); }
    static OreElem y(const ContextPtr& ctx) { return monomial(ctx, ctx->algebra().unit(), 1, 0); }
    /// c y^ypow x^xpow
    static OreElem monomial(const ContextPtr& ctx, const AlgElem& c, std::size_t ypow, std::size_t xpow) {
        return from_coeff(ctx, CoeffPoly::monomial(c, ypow), xpow);
    }
    /// p x^xpow
    static OreElem from_coeff(const ContextPtr& ctx, const CoeffPoly& p, std::size_t xpow) {
        std::vector<CoeffPoly> coeffs(xpow + 1, CoeffPoly(ctx->dim()));
        coeffs[xpow] = p;
        return OreElem(ctx, std::move(coeffs));
    }

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<CoeffPoly>& coeffs() const noexcept { return coeffs_; }
    CoeffPoly coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : CoeffPoly(ctx_->dim()); }
    const CoeffPoly& leading() const {
        if (coeffs_.empty()) throw PreconditionError("zero element has no leading coefficient");
        return coeffs_.back();
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree in x; -infinity for zero.
    Degree chi() const noexcept {
        return coeffs_.empty() ? Degree::neg_infinity() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
    }

    /// Largest y-degree over all coefficients.
    Degree max_ydeg() const noexcept {
        Degree d;
        for (const auto& c : coeffs_) d = max(d, c.ydeg());
        return d;
    }

    /// Every coefficient lies in Q[y] (rational multiples of the unit).
    bool has_scalar_coefficients() const {
        for (const auto& c : coeffs_)
            if (!c.is_scalar(ctx_->algebra())) return false;
        return true;
    }

    OreElem& operator+=(const OreElem& o) {
        check(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), CoeffPoly(ctx_->dim()));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    OreElem& operator-=(const OreElem& o) {
        check(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), CoeffPoly(ctx_->dim()));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    OreElem& operator*=(const Rat& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend OreElem operator+(OreElem a, const OreElem& b) { return a += b; }
    friend OreElem operator-(OreElem a, const OreElem& b) { return a -= b; }
    friend OreElem operator*(const Rat& s, OreElem a) { return a *= s; }
    OreElem operator-() const {
        OreElem r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend bool operator==(const OreElem& a, const OreElem& b) {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }

    void check(const OreElem& o) const {
        if (o.ctx_ != ctx_) throw PreconditionError("elements belong to different Ore contexts");
    }

private:
    void require_ctx() const {
        if (!ctx_) throw PreconditionError("null Ore context");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    ContextPtr ctx_;
    std::vector<CoeffPoly> coeffs_;
};

/**
 * (a x^m)(b x^n) = sum_i (a pi^m_i(b)) x^{i+n}, extended bilinearly. The
 * coefficient product a pi^m_i(b) is taken in A[y] and x^{i+n} is a formal
 * placement, so no reassociation of coefficients happens.
 */
inline OreElem ore_mul(const OreElem& u, const OreElem& v) {
    u.check(v);
    const auto& ctx = *u.context();
    if (u.is_zero() || v.is_zero()) return OreElem::zero(u.context());
    const std::size_t du = u.coeffs().size() - 1;
    const std::size_t dv = v.coeffs().size() - 1;
    std::vector<CoeffPoly> out(du + dv + 1, CoeffPoly(ctx.dim()));
    if (ctx.sigma().is_identity()) {
        // pi^m_i = C(m, i) delta^{m-i}: only the delta powers of b are needed
        const auto binom = detail::binomial_rows(du);
        for (std::size_t n = 0; n <= dv; ++n) {
            const CoeffPoly& b = v.coeffs()[n];
            if (b.is_zero()) continue;
            std::vector<CoeffPoly> powers{b};
            for (std::size_t t = 1; t <= du && !powers.back().is_zero(); ++t)
                powers.push_back(ctx.apply_delta(powers.back()));
            for (std::size_t m = 0; m <= du; ++m) {
                const CoeffPoly& a = u.coeffs()[m];
                if (a.is_zero()) continue;
                for (std::size_t i = 0; i <= m; ++i) {
                    const std::size_t t = m - i;
                    if (t >= powers.size() || powers[t].is_zero()) continue;
                    CoeffPoly term = poly_mul(ctx.algebra(), a, powers[t]);
                    if (!binom[m][i].is_one()) term *= binom[m][i];
                    out[i + n] += term;
                }
            }
        }
        return OreElem(u.context(), std::move(out));
    }
    for (std::size_t n = 0; n <= dv; ++n) {
        const CoeffPoly& b = v.coeffs()[n];
        if (b.is_zero()) continue;
        const auto tri = ctx.pi_triangle(b, du);
        for (std::size_t m = 0; m <= du; ++m) {
            const CoeffPoly& a = u.coeffs()[m];
            if (a.is_zero()) continue;
            for (std::size_t i = 0; i <= m; ++i) {
                if (tri[m][i].is_zero()) continue;
                out[i + n] += poly_mul(ctx.algebra(), a, tri[m][i]);
            }
        }
    }
    return OreElem(u.context(), std::move(out));
}

inline OreElem operator*(const OreElem& u, const OreElem& v) { return ore_mul(u, v); }

inline Degree chi(const OreElem& u) noexcept { return u.chi(); }

inline bool commutes(const OreElem& u, const OreElem& v) { return ore_mul(u, v) == ore_mul(v, u); }

/// (uv)w - u(vw)
inline OreElem associator_ore(const OreElem& u, const OreElem& v, const OreElem& w) {
    return ore_mul(ore_mul(u, v), w) - ore_mul(u, ore_mul(v, w));
}

/// b^0 = 1, b^k = b (b^{k-1}).
inline OreElem left_power(const OreElem& b, std::size_t k) {
    OreElem result = OreElem::one(b.context());
    for (std::size_t i = 0; i < k; ++i) result = ore_mul(b, result);
    return result;
}

struct NucleusWitness {
    int slot;  // position of the tested element: 0 (u,v,w), 1 (v,u,w), 2 (v,w,u)
    OreElem v;
    OreElem w;
    OreElem associator;
};

struct NucleusReport {
    bool in_nucleus = true;
    std::optional<NucleusWitness> witness;
    std::size_t monomials_checked = 0;
};

/// All c y^j x^k with c a basis element, j <= ydeg_bound, k <= xdeg_bound.
inline std::vector<OreElem> basis_monomials(const ContextPtr& ctx, std::size_t xdeg_bound, std::size_t ydeg_bound) {
    std::vector<OreElem> out;
    for (std::size_t k = 0; k <= xdeg_bound; ++k)
        for (std::size_t j = 0; j <= ydeg_bound; ++j)
            for (std::size_t c = 0; c < ctx->dim(); ++c)
                out.push_back(OreElem::monomial(ctx, ctx->algebra().basis(c), j, k));
    return out;
}

/**
 * Bounded nucleus certificate: u associates in all three slots with every
 * pair of basis monomials up to the bounds. By trilinearity this covers
 * the whole subspace those monomials span, but nothing beyond it.
 */
inline NucleusReport nucleus_check(const OreElem& u, std::size_t xdeg_bound, std::size_t ydeg_bound) {
    const auto monos = basis_monomials(u.context(), xdeg_bound, ydeg_bound);
    NucleusReport report;
    report.monomials_checked = monos.size();

    std::vector<OreElem> uv;
    std::vector<OreElem> vu;
    uv.reserve(monos.size());
    vu.reserve(monos.size());
    for (const auto& v : monos) {
        uv.push_back(ore_mul(u, v));
        vu.push_back(ore_mul(v, u));
    }

    auto fail = [&](int slot, std::size_t i, std::size_t j, OreElem lhs, const OreElem& rhs) {
        report.in_nucleus = false;
        report.witness = NucleusWitness{slot, monos[i], monos[j], lhs - rhs};
        return report;
    };

    for (std::size_t i = 0; i < monos.size(); ++i) {
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const OreElem vw = ore_mul(monos[i], monos[j]);
            // (u v) w vs u (v w)
            if (OreElem lhs = ore_mul(uv[i], monos[j]), rhs = ore_mul(u, vw); lhs != rhs)
                return fail(0, i, j, std::move(lhs), rhs);
            // (v u) w vs v (u w)
            if (OreElem lhs = ore_mul(vu[i], monos[j]), rhs = ore_mul(monos[i], uv[j]); lhs != rhs)
                return fail(1, i, j, std::move(lhs), rhs);
            // (v w) u vs v (w u)
            if (OreElem lhs = ore_mul(vw, u), rhs = ore_mul(monos[i], vu[j]); lhs != rhs)
                return fail(2, i, j, std::move(lhs), rhs);
        }
    }
    return report;
}

/// Random element with x-degree <= max_x and coefficient y-degree <= max_y.
/// With scalar_coefficients set, every coefficient lies in Q[y].
inline OreElem random_ore_elem(Rng& rng, const ContextPtr& ctx, std::size_t max_x, std::size_t max_y,
                               bool scalar_coefficients = false, int density = 60) {
    const AlgebraSpec rationals = AlgebraSpec::rationals();
    std::vector<CoeffPoly> coeffs;
    const auto deg = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(max_x)));
    for (std::size_t k = 0; k <= deg; ++k) {
        if (scalar_coefficients) {
            const CoeffPoly q = random_coeff_poly(rng, rationals, max_y, density);
            std::vector<AlgElem> cs;
            for (const auto& c : q.coeffs()) cs.push_back(ctx->algebra().scalar(c[0]));
            coeffs.emplace_back(ctx->dim(), std::move(cs));
        } else {
            coeffs.push_back(random_coeff_poly(rng, ctx->algebra(), max_y, density));
        }
    }
    return OreElem(ctx, std::move(coeffs));
}

}  // namespace ore
