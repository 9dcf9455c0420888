#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ore/algebra.hpp"
#include "ore/bc_dependence.hpp"
#include "ore/centralizer.hpp"
#include "ore/error.hpp"
#include "ore/format.hpp"
#include "ore/ore_ring.hpp"

namespace ore {

using json = nlohmann::json;

inline json rat_to_json(const Rat& r) { return r.str(); }

/// Accepts "p/q" strings and JSON integers.
inline Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    throw PreconditionError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline json degree_to_json(Degree d) { return d.is_finite() ? json(d.value()) : json("-inf"); }

/// {"label", "dim", "names", "unit", "constants": [i][j][k], "conjugation"?}
inline json algebra_to_json(const AlgebraSpec& spec) {
    const std::size_t d = spec.dim();
    json constants = json::array();
    for (std::size_t i = 0; i < d; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < d; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < d; ++k) cell.push_back(rat_to_json(spec.constant(i, j, k)));
            row.push_back(std::move(cell));
        }
        constants.push_back(std::move(row));
    }
    json out{{"label", spec.label()},
             {"dim", d},
             {"names", spec.names()},
             {"unit", spec.unit_index()},
             {"constants", std::move(constants)}};
    if (spec.conjugation()) {
        json conj = json::array();
        for (const auto& r : *spec.conjugation()) conj.push_back(rat_to_json(r));
        out["conjugation"] = std::move(conj);
    }
    return out;
}

inline AlgebraSpec algebra_from_json(const json& j) {
    try {
        const auto names = j.at("names").get<std::vector<std::string>>();
        const std::size_t d = names.size();
        if (j.contains("dim") && j.at("dim").get<std::size_t>() != d)
            throw PreconditionError("algebra JSON: dim does not match the number of names");
        for (const auto& n : names) {
            if (n == "x" || n == "y") throw PreconditionError("algebra JSON: basis name '" + n + "' is reserved");
            const bool ident = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
            bool rest = ident;
            for (char c : n) rest = rest && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
            if (!rest) throw PreconditionError("algebra JSON: basis name '" + n + "' is not an identifier");
        }
        const json& c = j.at("constants");
        if (!c.is_array() || c.size() != d) throw PreconditionError("algebra JSON: constants must be dim x dim x dim");
        RatVector flat;
        for (const auto& row : c) {
            if (!row.is_array() || row.size() != d)
                throw PreconditionError("algebra JSON: constants must be dim x dim x dim");
            for (const auto& cell : row) {
                if (!cell.is_array() || cell.size() != d)
                    throw PreconditionError("algebra JSON: constants must be dim x dim x dim");
                for (const auto& v : cell) flat.push_back(rat_from_json(v));
            }
        }
        std::optional<RatVector> conj;
        if (j.contains("conjugation")) {
            conj.emplace();
            for (const auto& v : j.at("conjugation")) conj->push_back(rat_from_json(v));
        }
        return AlgebraSpec(names, j.value("unit", std::size_t{0}), std::move(flat), std::move(conj),
                           j.value("label", std::string("custom")));
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("algebra JSON: ") + e.what());
    }
}

/// {"text", "chi", "coeffs": [{"k", "j", "c": [coordinates]}]}
inline json ore_elem_to_json(const OreElem& u) {
    json coeffs = json::array();
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
        const CoeffPoly& p = u.coeffs()[k];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p.coeffs()[j].is_zero()) continue;
            json coords = json::array();
            for (const auto& r : p.coeffs()[j].coords()) coords.push_back(rat_to_json(r));
            coeffs.push_back({{"k", k}, {"j", j}, {"c", std::move(coords)}});
        }
    }
    return {{"text", format_ore_elem(u)}, {"chi", degree_to_json(u.chi())}, {"coeffs", std::move(coeffs)}};
}

inline OreElem ore_elem_from_json(const json& j, const ContextPtr& ctx) {
    try {
        OreElem u = OreElem::zero(ctx);
        for (const auto& term : j.at("coeffs")) {
            RatVector coords;
            for (const auto& v : term.at("c")) coords.push_back(rat_from_json(v));
            if (coords.size() != ctx->dim()) throw PreconditionError("element JSON: coordinate count mismatch");
            u += OreElem::monomial(ctx, AlgElem(std::move(coords)), term.at("j").get<std::size_t>(),
                                   term.at("k").get<std::size_t>());
        }
        return u;
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("element JSON: ") + e.what());
    }
}

/// {"text", "terms": [{"i", "j", "c"}]} for c s^j t^i
inline json bivar_to_json(const BivarPoly& p) {
    json terms = json::array();
    for (const auto& [i, j] : p.support()) terms.push_back({{"i", i}, {"j", j}, {"c", rat_to_json(p.coeff(i, j))}});
    return {{"text", p.str()}, {"terms", std::move(terms)}};
}

inline BivarPoly bivar_from_json(const json& j) {
    try {
        BivarPoly p;
        for (const auto& term : j.at("terms"))
            p += BivarPoly::monomial(rat_from_json(term.at("c")), term.at("i").get<std::size_t>(),
                                     term.at("j").get<std::size_t>());
        return p;
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("polynomial JSON: ") + e.what());
    }
}

inline json nucleus_report_to_json(const NucleusReport& r) {
    json out{{"in_nucleus", r.in_nucleus}, {"monomials_checked", r.monomials_checked}};
    if (r.witness) {
        out["witness"] = {{"slot", r.witness->slot},
                          {"v", format_ore_elem(r.witness->v)},
                          {"w", format_ore_elem(r.witness->w)},
                          {"associator", format_ore_elem(r.witness->associator)}};
    }
    return out;
}

inline json module_basis_to_json(const ModuleBasis& b) {
    json elems = json::array();
    for (const auto& e : b.elements) elems.push_back(ore_elem_to_json(e));
    return {{"rank", b.elements.size()}, {"ell", b.ell}, {"m", b.m}, {"degrees", b.degrees}, {"elements", elems}};
}

inline json d_certificate_to_json(const DCertificate& c) {
    json scalars = json::array();
    for (const auto& r : c.scalars) scalars.push_back(rat_to_json(r));
    return {{"dependent", c.dependent},
            {"scalars", std::move(scalars)},
            {"leading_rank", c.leading_rank},
            {"condition_holds", c.condition_holds}};
}

}  // namespace ore
