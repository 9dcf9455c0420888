#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ore/error.hpp"
#include "ore/matrix.hpp"
#include "ore/ore_ring.hpp"
#include "ore/random.hpp"

namespace ore {

namespace detail {

/// Coordinates of u keyed by (x-degree k, y-degree j, basis index c).
inline SparseVector flatten(const OreElem& u) {
    const std::size_t d = u.context()->dim();
    std::map<std::size_t, Rat> entries;
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
        const auto& poly = u.coeffs()[k];
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const AlgElem& c = poly.coeffs()[j];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < d; ++i)
                if (!c[i].is_zero()) entries.emplace(((k << 24) + j) * d + i, c[i]);
        }
    }
    return SparseVector(std::move(entries));
}

/// c u for u with coefficients in Q[y].
inline OreElem times_constant(const AlgElem& c, const OreElem& u) {
    const AlgebraSpec& spec = u.context()->algebra();
    std::vector<CoeffPoly> coeffs;
    for (const auto& poly : u.coeffs()) {
        std::vector<AlgElem> cs;
        for (const auto& a : poly.coeffs()) {
            const auto r = spec.as_scalar(a);
            if (!r) throw InternalError("times_constant expects scalar coefficients");
            cs.push_back(*r * c);
        }
        coeffs.emplace_back(spec.dim(), std::move(cs));
    }
    return OreElem(u.context(), std::move(coeffs));
}

inline std::size_t to_count(Degree d) { return static_cast<std::size_t>(d.value()); }

}  // namespace detail

/**
 * A fixed element a together with the finite search window for its
 * centralizer. ydeg_caps[k] bounds the y-degree of the x^k coefficient of
 * candidates; when absent, caps are derived per target degree n as
 *
 *     max_{n' <= n} leading_ydeg(a, n') + D n,   D = max y-degree in a,
 *
 * applied to every coefficient (leading_ydeg values that do not exist are
 * skipped, and count as 0 when none exists).
 */
struct CentralizerQuery {
    OreElem a;
    std::size_t max_xdeg = 0;
    std::optional<std::vector<std::size_t>> ydeg_caps;
    std::size_t nucleus_xdeg = 2;
    std::size_t nucleus_ydeg = 2;
};

struct ModuleBasis {
    std::vector<OreElem> elements;
    std::vector<std::int64_t> degrees;
    std::size_t ell = 0;  // dimension of the coefficient algebra
    std::size_t m = 0;    // chi(a)
};

/**
 * Forced y-degree of the leading coefficient of a centralizer element of
 * x-degree n. With s = deg_y sigma(y) > 1 and alpha = deg_y a_m:
 *
 *     beta = alpha (s^n - 1) / (s^m - 1),
 *
 * and in the differential context (sigma = id, delta = d/dy), beta = n alpha / m.
 * Returns nullopt when beta is not a nonnegative integer.
 */
inline std::optional<std::size_t> leading_ydeg(const OreElem& a, std::size_t n) {
    if (a.chi() <= Degree(0)) throw PreconditionError("leading_ydeg needs chi(a) > 0");
    const auto& ctx = *a.context();
    const auto m = detail::to_count(a.chi());
    const auto alpha = static_cast<std::int64_t>(detail::to_count(a.leading().ydeg()));
    Rat beta;
    if (ctx.sigma().is_identity()) {
        if (ctx.delta().mode() != DeltaSpec::Mode::d_dy)
            throw PreconditionError("leading_ydeg with sigma = id needs delta = d/dy");
        beta = Rat(static_cast<std::int64_t>(n) * alpha, static_cast<std::int64_t>(m));
    } else {
        const auto s = static_cast<std::int64_t>(ctx.sigma().s());
        if (s < 2) throw PreconditionError("leading_ydeg needs deg sigma(y) > 1 for substitutions");
        auto power = [s](std::size_t e) {
            Rat p(1);
            for (std::size_t i = 0; i < e; ++i) p *= Rat(s);
            return p;
        };
        beta = Rat(alpha) * (power(n) - Rat(1)) / (power(m) - Rat(1));
    }
    if (!beta.is_integer() || beta.sign() < 0) return std::nullopt;
    const mpz_class value = beta.numerator();
    if (!value.fits_slong_p()) throw PreconditionError("leading_ydeg overflows");
    return static_cast<std::size_t>(value.get_si());
}

/// Per-coefficient y-degree caps used for target x-degree n.
inline std::vector<std::size_t> resolved_ydeg_caps(const CentralizerQuery& q, std::size_t n) {
    if (q.ydeg_caps) {
        if (q.ydeg_caps->size() <= n)
            throw PreconditionError("ydeg_caps has no entry for x-degree " + std::to_string(n));
        return std::vector<std::size_t>(q.ydeg_caps->begin(), q.ydeg_caps->begin() + static_cast<std::ptrdiff_t>(n + 1));
    }
    std::size_t lead = 0;
    for (std::size_t k = 0; k <= n; ++k)
        if (auto l = leading_ydeg(q.a, k)) lead = std::max(lead, *l);
    const std::size_t slack = detail::to_count(q.a.max_ydeg()) * n;
    return std::vector<std::size_t>(n + 1, lead + slack);
}

/// Rejects queries whose element is not usable: chi(a) <= 0, or a fails
/// nucleus_check at the query bounds.
inline void validate_query(const CentralizerQuery& q) {
    if (q.a.chi() <= Degree(0)) throw PreconditionError("centralizer query needs chi(a) > 0");
    const auto report = nucleus_check(q.a, q.nucleus_xdeg, q.nucleus_ydeg);
    if (!report.in_nucleus)
        throw PreconditionError("centralizer query element is not in the nucleus (bounded check at x-degree " +
                                std::to_string(q.nucleus_xdeg) + ", y-degree " + std::to_string(q.nucleus_ydeg) +
                                ")");
}

namespace detail {

/// Basis of {b : chi(b) <= n, coefficient y-degrees within caps, ab = ba}.
inline std::vector<OreElem> solve_centralizer(const CentralizerQuery& q, std::size_t n) {
    const ContextPtr& ctx = q.a.context();
    const AlgebraSpec& spec = ctx->algebra();
    const auto caps = resolved_ydeg_caps(q, n);
    // with a in Q[y][x], b -> ab - ba acts on each coordinate of A separately
    const bool decoupled = q.a.has_scalar_coefficients();

    std::vector<OreElem> unknowns;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t j = 0; j <= caps[k]; ++j) {
            if (decoupled) {
                unknowns.push_back(OreElem::monomial(ctx, spec.unit(), j, k));
            } else {
                for (std::size_t c = 0; c < spec.dim(); ++c)
                    unknowns.push_back(OreElem::monomial(ctx, spec.basis(c), j, k));
            }
        }

    std::vector<SparseVector> images;
    std::map<std::size_t, std::size_t> row_of;
    for (const auto& u : unknowns) {
        images.push_back(flatten(ore_mul(q.a, u) - ore_mul(u, q.a)));
        for (const auto& [idx, v] : images.back().entries()) row_of.emplace(idx, 0);
    }
    std::size_t next = 0;
    for (auto& [idx, row] : row_of) row = next++;

    RatMatrix system(row_of.size(), unknowns.size());
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [idx, v] : images[col].entries()) system(row_of.at(idx), col) = v;

    std::vector<OreElem> solutions;
    for (const auto& vec : nullspace_basis(system)) {
        OreElem b = OreElem::zero(ctx);
        for (std::size_t col = 0; col < vec.size(); ++col)
            if (!vec[col].is_zero()) b += vec[col] * unknowns[col];
        solutions.push_back(std::move(b));
    }
    if (decoupled) {
        std::vector<OreElem> expanded;
        for (const auto& s : solutions)
            for (std::size_t c = 0; c < spec.dim(); ++c) expanded.push_back(times_constant(spec.basis(c), s));
        solutions = std::move(expanded);
    }
    for (const auto& b : solutions)
        if (!commutes(q.a, b)) throw InternalError("centralizer solution fails to commute");
    return solutions;
}

}  // namespace detail

/// Q-basis of the centralizer of q.a among elements of x-degree <= n within
/// the y-degree caps. Every returned element is re-verified to commute.
inline std::vector<OreElem> centralizer_space(const CentralizerQuery& q, std::size_t n) {
    if (n > q.max_xdeg) throw PreconditionError("centralizer_space: n exceeds max_xdeg");
    validate_query(q);
    return detail::solve_centralizer(q, n);
}

/**
 * Greedy K[a]-module basis: b_1 = 1, then repeatedly the lowest-degree
 * centralizer element outside the K[a]-span of the earlier ones, where the
 * span at degree n is tested against all a^j b_i with chi(a^j b_i) <= n.
 */
inline ModuleBasis module_basis(const CentralizerQuery& q) {
    validate_query(q);
    const ContextPtr& ctx = q.a.context();
    ModuleBasis basis;
    basis.ell = ctx->dim();
    basis.m = detail::to_count(q.a.chi());

    std::vector<OreElem> powers{OreElem::one(ctx)};
    while ((powers.size() - 1) * basis.m <= q.max_xdeg) powers.push_back(ore_mul(q.a, powers.back()));

    LinearSpan span;
    // products a^j b_i already inserted, per basis element
    std::vector<std::size_t> inserted;
    auto extend_span = [&](std::size_t n) {
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
            while (inserted[i] < powers.size() &&
                   inserted[i] * basis.m + static_cast<std::size_t>(basis.degrees[i]) <= n) {
                span.insert(detail::flatten(ore_mul(powers[inserted[i]], basis.elements[i])));
                ++inserted[i];
            }
        }
    };
    auto add = [&](OreElem b, std::size_t n) {
        basis.degrees.push_back(b.chi().value());
        basis.elements.push_back(std::move(b));
        inserted.push_back(0);
        extend_span(n);
        if (basis.elements.size() > basis.ell * basis.m)
            throw InternalError("module basis exceeds the rank bound dim(A) * chi(a)");
    };

    add(OreElem::one(ctx), 0);
    for (std::size_t n = 0; n <= q.max_xdeg; ++n) {
        extend_span(n);
        auto candidates = detail::solve_centralizer(q, n);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const OreElem& u, const OreElem& v) { return u.chi() < v.chi(); });
        for (auto& b : candidates)
            if (!span.contains(detail::flatten(b))) add(std::move(b), n);
    }

    std::map<std::int64_t, std::size_t> per_residue;
    for (auto d : basis.degrees)
        if (++per_residue[d % static_cast<std::int64_t>(basis.m)] > basis.ell)
            throw InternalError("more than dim(A) basis elements share a degree residue");
    return basis;
}

struct DegreeSumCounterexample {
    std::vector<RatVector> phis;  // phis[i][j]: coefficient of a^j in phi_i
    Degree lhs;
    Degree rhs;
};

struct DegreeSumReport {
    bool holds = true;
    std::size_t trials = 0;
    std::optional<DegreeSumCounterexample> counterexample;
};

/**
 * Checks chi(sum_i phi_i(a) b_i) == max_i (chi(phi_i(a)) + chi(b_i)) on the
 * all-zero tuple, on phi_1 = 1 alone, and on `trials` seeded random tuples
 * of polynomials of degree <= 2 in a.
 */
inline DegreeSumReport check_degree_sum(const ModuleBasis& basis, const OreElem& a, std::size_t trials,
                                        std::uint64_t seed) {
    const ContextPtr& ctx = a.context();
    const std::size_t k = basis.elements.size();
    std::vector<OreElem> powers{OreElem::one(ctx), a, ore_mul(a, a)};
    Rng rng(seed);

    auto evaluate = [&](const std::vector<RatVector>& phis) -> std::pair<Degree, Degree> {
        OreElem sum = OreElem::zero(ctx);
        Degree rhs;
        for (std::size_t i = 0; i < k; ++i) {
            OreElem phi = OreElem::zero(ctx);
            for (std::size_t j = 0; j < phis[i].size(); ++j)
                if (!phis[i][j].is_zero()) phi += phis[i][j] * powers[j];
            const OreElem term = ore_mul(phi, basis.elements[i]);
            rhs = max(rhs, phi.chi() + basis.elements[i].chi());
            sum += term;
        }
        return {sum.chi(), rhs};
    };

    std::vector<std::vector<RatVector>> tuples;
    tuples.emplace_back(k);
    tuples.emplace_back(k);
    if (k > 0) tuples.back()[0] = {Rat(1)};
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<RatVector> phis(k);
        for (auto& phi : phis) {
            if (rng.chance(25)) continue;
            const auto deg = static_cast<std::size_t>(rng.integer(0, 2));
            for (std::size_t j = 0; j <= deg; ++j) phi.push_back(rng.rational(5, 3));
            while (phi.back().is_zero()) phi.back() = rng.rational(5, 3);
        }
        tuples.push_back(std::move(phis));
    }

    DegreeSumReport report;
    for (const auto& phis : tuples) {
        ++report.trials;
        const auto [lhs, rhs] = evaluate(phis);
        if (lhs != rhs) {
            report.holds = false;
            report.counterexample = DegreeSumCounterexample{phis, lhs, rhs};
            return report;
        }
    }
    return report;
}

struct DCertificate {
    bool dependent = false;
    RatVector scalars;  // integers, first nonzero positive; empty when independent
    std::size_t leading_rank = 0;
    bool condition_holds = false;  // |elems| <= ell, or a dependence was found
};

/**
 * Condition D(ell) for equal-chi elements: a rational combination whose
 * leading x-coefficients cancel, so that its chi drops. Found as a kernel
 * vector of the matrix of flattened leading coefficients.
 */
inline DCertificate check_D_condition(const std::vector<OreElem>& elems, std::size_t ell) {
    if (elems.empty()) throw PreconditionError("check_D_condition needs at least one element");
    const Degree target = elems.front().chi();
    for (const auto& e : elems) {
        if (e.is_zero()) throw PreconditionError("check_D_condition: zero element");
        if (e.chi() != target) throw PreconditionError("check_D_condition: elements must share chi");
        if (e.context() != elems.front().context()) throw PreconditionError("check_D_condition: context mismatch");
    }
    const ContextPtr& ctx = elems.front().context();
    const std::size_t d = ctx->dim();

    std::map<std::size_t, std::size_t> row_of;
    for (const auto& e : elems)
        for (std::size_t j = 0; j < e.leading().size(); ++j)
            for (std::size_t c = 0; c < d; ++c)
                if (!e.leading().coeffs()[j][c].is_zero()) row_of.emplace(j * d + c, 0);
    std::size_t next = 0;
    for (auto& [idx, row] : row_of) row = next++;

    RatMatrix lead(row_of.size(), elems.size());
    for (std::size_t col = 0; col < elems.size(); ++col) {
        const CoeffPoly& p = elems[col].leading();
        for (std::size_t j = 0; j < p.size(); ++j)
            for (std::size_t c = 0; c < d; ++c)
                if (!p.coeffs()[j][c].is_zero()) lead(row_of.at(j * d + c), col) = p.coeffs()[j][c];
    }

    DCertificate cert;
    cert.leading_rank = rank(lead);
    const auto kernel = nullspace_basis(lead);
    if (!kernel.empty()) {
        RatVector v = kernel.front();
        mpz_class den = 1, num = 0;
        for (const auto& r : v) {
            if (r.is_zero()) continue;
            den = lcm(den, r.denominator());
            num = gcd(num, r.numerator());
        }
        const Rat first = *std::find_if(v.begin(), v.end(), [](const Rat& r) { return !r.is_zero(); });
        Rat scale = Rat(mpq_class(den, num));
        if (first.sign() < 0) scale = -scale;
        for (auto& r : v) r *= scale;

        OreElem combo = OreElem::zero(ctx);
        for (std::size_t i = 0; i < elems.size(); ++i) combo += v[i] * elems[i];
        if (!(combo.chi() < target)) throw InternalError("D-condition combination does not lower chi");
        cert.dependent = true;
        cert.scalars = std::move(v);
    }
    cert.condition_holds = cert.dependent || elems.size() <= ell;
    return cert;
}

struct RankDividesReport {
    bool divides = false;
    bool residues_distinct = false;
    bool residues_subgroup = false;
    std::vector<std::int64_t> residues;
    bool holds() const noexcept { return divides && residues_distinct && residues_subgroup; }
};

/// For a one-dimensional coefficient algebra: |basis| divides m, and the
/// degrees of the basis are distinct mod m and closed under addition mod m.
inline RankDividesReport check_rank_divides(const ModuleBasis& basis, std::size_t m) {
    if (basis.ell != 1) throw PreconditionError("check_rank_divides requires a one-dimensional coefficient algebra");
    if (m == 0) throw PreconditionError("check_rank_divides requires m > 0");
    const auto mm = static_cast<std::int64_t>(m);
    RankDividesReport report;
    report.divides = !basis.elements.empty() && m % basis.elements.size() == 0;
    for (auto d : basis.degrees) report.residues.push_back(((d % mm) + mm) % mm);
    std::vector<std::int64_t> sorted = report.residues;
    std::sort(sorted.begin(), sorted.end());
    report.residues_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    report.residues_subgroup = std::binary_search(sorted.begin(), sorted.end(), 0);
    for (auto r1 : sorted)
        for (auto r2 : sorted)
            if (!std::binary_search(sorted.begin(), sorted.end(), (r1 + r2) % mm)) report.residues_subgroup = false;
    return report;
}

}  // namespace ore
