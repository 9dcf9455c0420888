#pragma once

#include <cstddef>
#include <sstream>
#include <string>

#include "ore/algebra.hpp"
#include "ore/ore_ring.hpp"

namespace ore {

namespace detail {

/// Coefficient as it appears in a sum: "3/2*e1 - e5", with no outer sign
/// handling beyond the first term.
inline std::string alg_sum(const AlgebraSpec& spec, const AlgElem& c) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        Rat r = c[i];
        if (r.is_zero()) continue;
        if (first)
            out << (r.sign() < 0 ? "-" : "");
        else
            out << (r.sign() < 0 ? " - " : " + ");
        if (r.sign() < 0) r = -r;
        if (i == spec.unit_index())
            out << r;
        else if (r.is_one())
            out << spec.names()[i];
        else
            out << r << "*" << spec.names()[i];
        first = false;
    }
    return out.str();
}

}  // namespace detail

/// Element of A as text: scalars as rationals, other elements as sums of
/// basis names.
inline std::string format_alg_elem(const AlgebraSpec& spec, const AlgElem& c) {
    if (c.is_zero()) return "0";
    return detail::alg_sum(spec, c);
}

/**
 * Canonical text of an Ore element: terms c*y^j*x^k in decreasing x-degree,
 * then decreasing y-degree. The output parses back to the same element in
 * any context over the same algebra.
 */
inline std::string format_ore_elem(const OreElem& u) {
    if (u.is_zero()) return "0";
    const AlgebraSpec& spec = u.context()->algebra();
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = u.coeffs().size(); k-- > 0;) {
        const CoeffPoly& poly = u.coeffs()[k];
        for (std::size_t j = poly.size(); j-- > 0;) {
            const AlgElem& c = poly.coeffs()[j];
            if (c.is_zero()) continue;

            std::string vars;
            auto var = [&](const char* name, std::size_t e) {
                if (e == 0) return;
                if (!vars.empty()) vars += "*";
                vars += name;
                if (e > 1) vars += "^" + std::to_string(e);
            };
            var("y", j);
            var("x", k);

            // sign pulled out of the coefficient when its first coordinate is negative
            std::size_t lead = 0;
            while (c[lead].is_zero()) ++lead;
            const bool negative = c[lead].sign() < 0;
            const AlgElem mag = negative ? -c : c;
            out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            first = false;

            std::size_t nonzero = 0;
            for (std::size_t i = 0; i < spec.dim(); ++i)
                if (!mag[i].is_zero()) ++nonzero;
            std::string coeff = detail::alg_sum(spec, mag);
            if (nonzero > 1) {
                out << "(" << coeff << ")";
                if (!vars.empty()) out << "*" << vars;
            } else if (vars.empty()) {
                out << coeff;
            } else if (spec.as_scalar(mag) && mag[spec.unit_index()].is_one()) {
                out << vars;
            } else {
                out << coeff << "*" << vars;
            }
        }
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const OreElem& u) { return os << format_ore_elem(u); }

}  // namespace ore
