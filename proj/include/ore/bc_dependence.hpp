#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ore/centralizer.hpp"
#include "ore/error.hpp"
#include "ore/matrix.hpp"
#include "ore/ore_ring.hpp"

namespace ore {

/// Polynomial P(s, t) = sum f[i][j] s^j t^i over Q, trimmed so that the
/// last row and the last column each hold a nonzero entry.
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(std::vector<RatVector> grid) : grid_(std::move(grid)) { trim(); }

    static BivarPoly monomial(const Rat& c, std::size_t t_pow, std::size_t s_pow) {
        std::vector<RatVector> grid(t_pow + 1, RatVector(s_pow + 1));
        grid[t_pow][s_pow] = c;
        return BivarPoly(std::move(grid));
    }

    bool is_zero() const noexcept { return grid_.empty(); }
    const std::vector<RatVector>& grid() const noexcept { return grid_; }
    std::size_t t_degree() const { return grid_.empty() ? 0 : grid_.size() - 1; }
    std::size_t s_degree() const {
        std::size_t d = 0;
        for (const auto& row : grid_) d = std::max(d, row.empty() ? 0 : row.size() - 1);
        return d;
    }
    /// Coefficient of s^j t^i.
    Rat coeff(std::size_t i, std::size_t j) const {
        return i < grid_.size() && j < grid_[i].size() ? grid_[i][j] : Rat();
    }

    BivarPoly& operator+=(const BivarPoly& o) {
        if (o.grid_.size() > grid_.size()) grid_.resize(o.grid_.size());
        for (std::size_t i = 0; i < o.grid_.size(); ++i) {
            if (o.grid_[i].size() > grid_[i].size()) grid_[i].resize(o.grid_[i].size());
            for (std::size_t j = 0; j < o.grid_[i].size(); ++j) grid_[i][j] += o.grid_[i][j];
        }
        trim();
        return *this;
    }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator*(const Rat& c, BivarPoly p) {
        for (auto& row : p.grid_)
            for (auto& v : row) v *= c;
        p.trim();
        return p;
    }
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    /// Terms in decreasing graded order: total degree, then s-exponent.
    std::vector<std::pair<std::size_t, std::size_t>> support() const {
        std::vector<std::pair<std::size_t, std::size_t>> terms;
        for (std::size_t i = 0; i < grid_.size(); ++i)
            for (std::size_t j = 0; j < grid_[i].size(); ++j)
                if (!grid_[i][j].is_zero()) terms.emplace_back(i, j);
        std::sort(terms.begin(), terms.end(), [](const auto& p, const auto& q) {
            const auto dp = p.first + p.second, dq = q.first + q.second;
            if (dp != dq) return dp > dq;
            return p.second > q.second;
        });
        return terms;
    }

    /// Scales so that the leading term in graded order has coefficient 1.
    BivarPoly normalized() const {
        if (is_zero()) return *this;
        const auto [i, j] = support().front();
        return grid_[i][j].inverse() * *this;
    }

    /// Human-readable form such as "s^3 - t^2" or "2*s*t + 1/2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [i, j] : support()) {
            Rat c = grid_[i][j];
            if (first) {
                if (c.sign() < 0) out << "-";
            } else {
                out << (c.sign() < 0 ? " - " : " + ");
            }
            if (c.sign() < 0) c = -c;
            std::string mono;
            auto var = [&](const char* name, std::size_t e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += name;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            var("s", j);
            var("t", i);
            if (mono.empty())
                out << c;
            else if (c.is_one())
                out << mono;
            else
                out << c << "*" << mono;
            first = false;
        }
        return out.str();
    }

private:
    void trim() {
        for (auto& row : grid_)
            while (!row.empty() && row.back().is_zero()) row.pop_back();
        while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
    }

    std::vector<RatVector> grid_;
};

namespace detail {

/// table[i][j] = a^j b^i for i <= max_t, j <= max_s.
inline std::vector<std::vector<OreElem>> monomial_values(const OreElem& a, const OreElem& b, std::size_t max_t,
                                                         std::size_t max_s) {
    std::vector<OreElem> apow{OreElem::one(a.context())}, bpow{OreElem::one(a.context())};
    for (std::size_t j = 1; j <= max_s; ++j) apow.push_back(ore_mul(a, apow.back()));
    for (std::size_t i = 1; i <= max_t; ++i) bpow.push_back(ore_mul(b, bpow.back()));
    std::vector<std::vector<OreElem>> table(max_t + 1);
    for (std::size_t i = 0; i <= max_t; ++i)
        for (std::size_t j = 0; j <= max_s; ++j) table[i].push_back(ore_mul(apow[j], bpow[i]));
    return table;
}

}  // namespace detail

/// P(a, b) = sum_i f_i(a) b^i with f_i(a) = sum_j f[i][j] a^j, powers left-normed.
inline OreElem evaluate(const BivarPoly& p, const OreElem& a, const OreElem& b) {
    if (a.context() != b.context()) throw PreconditionError("evaluate: context mismatch");
    if (!commutes(a, b)) throw PreconditionError("evaluate: a and b do not commute");
    const ContextPtr& ctx = a.context();
    OreElem total = OreElem::zero(ctx);
    OreElem bpow = OreElem::one(ctx);
    for (std::size_t i = 0; i < p.grid().size(); ++i) {
        if (i > 0) bpow = ore_mul(b, bpow);
        OreElem fi = OreElem::zero(ctx);
        OreElem apow = OreElem::one(ctx);
        for (std::size_t j = 0; j < p.grid()[i].size(); ++j) {
            if (j > 0) apow = ore_mul(a, apow);
            if (!p.grid()[i][j].is_zero()) fi += p.grid()[i][j] * apow;
        }
        total += ore_mul(fi, bpow);
    }
    return total;
}

/// Checks the preconditions shared by the annihilating-polynomial search.
inline void validate_bc_pair(const OreElem& a, const OreElem& b, std::size_t nucleus_xdeg = 2,
                             std::size_t nucleus_ydeg = 2) {
    if (a.context() != b.context()) throw PreconditionError("context mismatch");
    if (a.chi() <= Degree(0)) throw PreconditionError("annihilating polynomial needs chi(a) > 0");
    if (!commutes(a, b)) throw PreconditionError("a and b do not commute");
    if (!nucleus_check(a, nucleus_xdeg, nucleus_ydeg).in_nucleus)
        throw PreconditionError("a is not in the nucleus (bounded check)");
}

/**
 * Nonzero P with t-degree <= max_t_deg and s-degree <= max_s_deg and
 * P(a, b) = 0, or nullopt if the box holds none. Among relations, the one
 * with the smallest leading monomial in graded order is returned,
 * normalized to leading coefficient 1 and re-verified by evaluate.
 */
inline std::optional<BivarPoly> annihilating_polynomial(const OreElem& a, const OreElem& b, std::size_t max_t_deg,
                                                        std::size_t max_s_deg) {
    validate_bc_pair(a, b);
    const auto table = detail::monomial_values(a, b, max_t_deg, max_s_deg);

    // columns in increasing graded order
    std::vector<std::pair<std::size_t, std::size_t>> monomials;
    for (std::size_t i = 0; i <= max_t_deg; ++i)
        for (std::size_t j = 0; j <= max_s_deg; ++j) monomials.emplace_back(i, j);
    std::sort(monomials.begin(), monomials.end(), [](const auto& p, const auto& q) {
        const auto dp = p.first + p.second, dq = q.first + q.second;
        if (dp != dq) return dp < dq;
        return p.second < q.second;
    });

    std::vector<SparseVector> columns;
    std::map<std::size_t, std::size_t> row_of;
    for (const auto& [i, j] : monomials) {
        columns.push_back(detail::flatten(table[i][j]));
        for (const auto& [idx, v] : columns.back().entries()) row_of.emplace(idx, 0);
    }
    std::size_t next = 0;
    for (auto& [idx, row] : row_of) row = next++;
    RatMatrix system(row_of.size(), columns.size());
    for (std::size_t col = 0; col < columns.size(); ++col)
        for (const auto& [idx, v] : columns[col].entries()) system(row_of.at(idx), col) = v;

    const auto kernel = nullspace_basis(system);
    if (kernel.empty()) return std::nullopt;
    BivarPoly p;
    for (std::size_t col = 0; col < monomials.size(); ++col)
        if (!kernel.front()[col].is_zero())
            p += BivarPoly::monomial(kernel.front()[col], monomials[col].first, monomials[col].second);
    p = p.normalized();
    if (!evaluate(p, a, b).is_zero()) throw InternalError("annihilating polynomial fails re-verification");
    return p;
}

struct BcSearchResult {
    std::optional<BivarPoly> polynomial;
    std::size_t max_t_deg = 0;  // box of the last attempt
    std::size_t max_s_deg = 0;
};

/// Box doubling from (s, t) degrees (chi(b), chi(a)), each at least 1, until
/// a relation appears or the s-degree bound would exceed budget.
inline BcSearchResult find_annihilating_polynomial(const OreElem& a, const OreElem& b, std::size_t budget = 32) {
    validate_bc_pair(a, b);
    BcSearchResult result;
    std::size_t s_deg = std::max<std::size_t>(1, b.is_zero() ? 1 : static_cast<std::size_t>(b.chi().value()));
    std::size_t t_deg = std::max<std::size_t>(1, static_cast<std::size_t>(a.chi().value()));
    while (true) {
        result.max_s_deg = s_deg;
        result.max_t_deg = t_deg;
        result.polynomial = annihilating_polynomial(a, b, t_deg, s_deg);
        if (result.polynomial || 2 * s_deg > budget) return result;
        s_deg *= 2;
        t_deg *= 2;
    }
}

}  // namespace ore
