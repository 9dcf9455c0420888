#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ore/algebra.hpp"
#include "ore/coeff_poly.hpp"
#include "ore/error.hpp"
#include "ore/random.hpp"

namespace ore {

/// Endomorphism of A[y] fixing A pointwise, determined by sigma(y). The image
/// of y has rational (hence central) coefficients.
class SigmaSpec {
public:
    enum class Mode { identity, substitution };

    static SigmaSpec identity() { return SigmaSpec(Mode::identity, {Rat(0), Rat(1)}); }

    /// sigma(y) given by its rational coefficients, lowest degree first.
    static SigmaSpec substitution(RatVector image_of_y) {
        while (!image_of_y.empty() && image_of_y.back().is_zero()) image_of_y.pop_back();
        if (image_of_y.size() < 2) throw PreconditionError("sigma(y) must have y-degree at least 1");
        return SigmaSpec(Mode::substitution, std::move(image_of_y));
    }
    static SigmaSpec substitution(const AlgebraSpec& spec, const CoeffPoly& image_of_y) {
        RatVector rats;
        for (const auto& c : image_of_y.coeffs()) {
            auto r = spec.as_scalar(c);
            if (!r) throw PreconditionError("sigma(y) must have rational (central) coefficients");
            rats.push_back(*r);
        }
        return substitution(std::move(rats));
    }

    Mode mode() const noexcept { return mode_; }
    bool is_identity() const noexcept { return mode_ == Mode::identity; }
    const RatVector& image_of_y() const noexcept { return image_; }
    /// deg_y sigma(y)
    std::size_t s() const noexcept { return image_.size() - 1; }

    CoeffPoly image_of_y(const AlgebraSpec& spec) const {
        std::vector<AlgElem> coeffs;
        for (const auto& r : image_) coeffs.push_back(spec.scalar(r));
        return CoeffPoly(spec.dim(), std::move(coeffs));
    }

private:
    SigmaSpec(Mode mode, RatVector image) : mode_(mode), image_(std::move(image)) {}

    Mode mode_;
    RatVector image_;
};

/// sum_j p_j sigma(y)^j, by Horner's rule.
inline CoeffPoly apply_sigma(const SigmaSpec& sigma, const CoeffPoly& p) {
    if (sigma.is_identity() || p.is_zero()) return p;
    CoeffPoly result(p.dim());
    for (std::size_t j = p.size(); j-- > 0;) {
        result = scalar_poly_mul(result, sigma.image_of_y());
        result += CoeffPoly::constant(p.coeffs()[j]);
    }
    return result;
}

/**
 * Additive map on A[y] vanishing on A.
 *
 *  - zero:          delta = 0
 *  - d_dy:          formal derivative (requires sigma = identity)
 *  - sigma_twisted: delta(y) given; delta(y^k) = sigma(y) delta(y^{k-1}) + delta(y) y^{k-1}
 *  - table:         delta(y^k) listed explicitly, zero past the table. No
 *                   Leibniz rule is implied; useful for negative controls.
 *
 * In every mode delta(c y^k) = c delta(y^k) for c in A.
 */
class DeltaSpec {
public:
    enum class Mode { zero, d_dy, sigma_twisted, table };

    static DeltaSpec zero() { return DeltaSpec(Mode::zero, {}); }
    static DeltaSpec d_dy() { return DeltaSpec(Mode::d_dy, {}); }
    static DeltaSpec sigma_twisted(CoeffPoly delta_of_y) {
        std::vector<CoeffPoly> v;
        v.push_back(std::move(delta_of_y));
        return DeltaSpec(Mode::sigma_twisted, std::move(v));
    }
    static DeltaSpec table(std::vector<CoeffPoly> images_of_powers) {
        return DeltaSpec(Mode::table, std::move(images_of_powers));
    }

    Mode mode() const noexcept { return mode_; }
    const CoeffPoly& delta_of_y() const {
        if (mode_ != Mode::sigma_twisted) throw PreconditionError("delta(y) is stored only in sigma_twisted mode");
        return polys_.front();
    }
    const std::vector<CoeffPoly>& table_entries() const noexcept { return polys_; }

private:
    DeltaSpec(Mode mode, std::vector<CoeffPoly> polys) : mode_(mode), polys_(std::move(polys)) {}

    Mode mode_;
    std::vector<CoeffPoly> polys_;
};

namespace detail {

/// delta(y^k) for k = 0..max_power in sigma_twisted mode.
inline std::vector<CoeffPoly> twisted_powers(const DeltaSpec& delta, const SigmaSpec& sigma, std::size_t dim,
                                             std::size_t max_power) {
    std::vector<CoeffPoly> images;
    images.emplace_back(dim);
    for (std::size_t k = 1; k <= max_power; ++k) {
        images.push_back(scalar_poly_mul(images.back(), sigma.image_of_y()) + delta.delta_of_y().shifted(k - 1));
    }
    return images;
}

}  // namespace detail

inline CoeffPoly apply_delta(const AlgebraSpec& spec, const DeltaSpec& delta, const SigmaSpec& sigma,
                             const CoeffPoly& p) {
    if (p.dim() != spec.dim()) throw PreconditionError("apply_delta: coefficient algebra mismatch");
    switch (delta.mode()) {
        case DeltaSpec::Mode::zero:
            return CoeffPoly(spec.dim());
        case DeltaSpec::Mode::d_dy:
            if (!sigma.is_identity()) throw PreconditionError("d/dy is a sigma-derivation only for sigma = identity");
            return p.derivative();
        case DeltaSpec::Mode::sigma_twisted:
        case DeltaSpec::Mode::table: {
            if (p.is_zero()) return p;
            std::vector<CoeffPoly> images;
            if (delta.mode() == DeltaSpec::Mode::sigma_twisted) {
                images = detail::twisted_powers(delta, sigma, spec.dim(), p.size() - 1);
            } else {
                images = delta.table_entries();
                images.resize(std::max(images.size(), p.size()), CoeffPoly(spec.dim()));
            }
            CoeffPoly out(spec.dim());
            for (std::size_t k = 0; k < p.size(); ++k) {
                if (p.coeffs()[k].is_zero() || images[k].is_zero()) continue;
                if (auto r = spec.as_scalar(p.coeffs()[k]))
                    out += *r * images[k];
                else
                    out += poly_mul(spec, CoeffPoly::constant(p.coeffs()[k]), images[k]);
            }
            return out;
        }
    }
    throw InternalError("unknown delta mode");
}

/// Checks delta(pq) == sigma(p) delta(q) + delta(p) q on seeded random pairs.
inline bool verify_sigma_derivation(const AlgebraSpec& spec, const SigmaSpec& sigma, const DeltaSpec& delta,
                                    std::size_t sample_count, std::uint64_t seed) {
    Rng rng(seed);
    // fixed low-degree probes, then random pairs
    std::vector<std::pair<CoeffPoly, CoeffPoly>> pairs;
    const CoeffPoly y = CoeffPoly::monomial(spec.unit(), 1);
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        pairs.emplace_back(y, CoeffPoly::monomial(spec.basis(i), 1));
        pairs.emplace_back(CoeffPoly::monomial(spec.basis(i), 2), y);
    }
    for (std::size_t n = 0; n < sample_count; ++n)
        pairs.emplace_back(random_coeff_poly(rng, spec, 3), random_coeff_poly(rng, spec, 3));

    for (const auto& [p, q] : pairs) {
        const CoeffPoly lhs = apply_delta(spec, delta, sigma, poly_mul(spec, p, q));
        const CoeffPoly rhs = poly_mul(spec, apply_sigma(sigma, p), apply_delta(spec, delta, sigma, q)) +
                              poly_mul(spec, apply_delta(spec, delta, sigma, p), q);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace ore
