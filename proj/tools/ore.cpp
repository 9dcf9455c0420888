// Command-line front end for the ore library.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ore/ore.hpp"

namespace {

struct Options {
    std::string ctx = "diff-oct";
    std::string s = "y^2";
    std::string delta_y = "0";
    std::string algebra_file;
    bool json = false;
    bool timing = false;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> operands;

    std::size_t xdeg = 3;
    std::size_t ydeg = 3;
    std::size_t deg = 1;
    std::size_t max_deg = 5;
    std::optional<std::size_t> ycap;
    std::optional<std::size_t> ell;
    std::optional<std::size_t> max_t;
    std::optional<std::size_t> max_s;
    std::size_t budget = 32;
    std::size_t samples = 50;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("ORE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ore::PreconditionError(std::string("ORE_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

/// Rational coefficients of a polynomial in y, lowest degree first.
ore::RatVector y_poly(const std::string& text, const char* flag) {
    const auto rat = ore::OreContext::diff_rat();
    const ore::OreElem u = ore::parse_element(text, rat);
    if (u.chi() > ore::Degree(0)) throw ore::PreconditionError(std::string(flag) + " must not involve x");
    ore::RatVector out;
    if (!u.is_zero())
        for (const auto& c : u.coeffs()[0].coeffs()) out.push_back(c[0]);
    return out;
}

ore::ContextPtr make_context(const Options& o, std::uint64_t seed) {
    std::optional<ore::AlgebraSpec> custom;
    if (!o.algebra_file.empty()) {
        std::ifstream in(o.algebra_file);
        if (!in) throw ore::PreconditionError("cannot read algebra file " + o.algebra_file);
        ore::json j;
        try {
            j = ore::json::parse(in);
        } catch (const ore::json::exception& e) {
            throw ore::PreconditionError("algebra file " + o.algebra_file + ": " + e.what());
        }
        custom = ore::algebra_from_json(j);
    }
    const std::size_t samples = ore::OreContext::kDefaultVerifySamples;
    if (o.ctx == "diff-rat" || o.ctx == "diff-oct") {
        if (!custom) return o.ctx == "diff-rat" ? ore::OreContext::diff_rat() : ore::OreContext::diff_oct();
        return ore::OreContext::create(*custom, ore::SigmaSpec::identity(), ore::DeltaSpec::d_dy(), "diff-custom",
                                       samples, seed);
    }
    if (o.ctx == "subst-oct") {
        const ore::RatVector sigma = y_poly(o.s, "--s");
        const ore::RatVector dy = y_poly(o.delta_y, "--delta-y");
        if (!custom) return ore::OreContext::subst_oct(sigma, dy);
        std::vector<ore::AlgElem> coeffs;
        for (const auto& r : dy) coeffs.push_back(custom->scalar(r));
        ore::CoeffPoly delta(custom->dim(), std::move(coeffs));
        return ore::OreContext::create(*custom, ore::SigmaSpec::substitution(sigma),
                                       ore::DeltaSpec::sigma_twisted(std::move(delta)), "subst-custom", samples,
                                       seed);
    }
    throw ore::PreconditionError("unknown context '" + o.ctx + "' (expected diff-rat, diff-oct or subst-oct)");
}

/// Text of a polynomial in y with rational coefficients.
std::string y_poly_text(const ore::RatVector& coeffs) {
    const auto rat = ore::OreContext::diff_rat();
    std::vector<ore::AlgElem> cs;
    for (const auto& r : coeffs) cs.push_back(rat->algebra().scalar(r));
    return ore::format_ore_elem(ore::OreElem::from_coeff(rat, ore::CoeffPoly(1, std::move(cs)), 0));
}

ore::json describe_context(const ore::OreContext& ctx) {
    const std::string sigma = ctx.sigma().is_identity() ? "id" : "y -> " + y_poly_text(ctx.sigma().image_of_y());
    std::string delta;
    switch (ctx.delta().mode()) {
        case ore::DeltaSpec::Mode::zero: delta = "0"; break;
        case ore::DeltaSpec::Mode::d_dy: delta = "d/dy"; break;
        case ore::DeltaSpec::Mode::sigma_twisted: {
            ore::RatVector coeffs;
            for (const auto& c : ctx.delta().delta_of_y().coeffs()) coeffs.push_back(*ctx.algebra().as_scalar(c));
            delta = "y -> " + y_poly_text(coeffs);
            break;
        }
        case ore::DeltaSpec::Mode::table: delta = "table"; break;
    }
    return {{"name", ctx.name()}, {"algebra", ctx.algebra().label()}, {"dim", ctx.dim()}, {"sigma", sigma},
            {"delta", delta}};
}

struct Outcome {
    ore::json result;
    std::string text;
};

void require_operands(const Options& o, std::size_t lo, std::size_t hi, const std::string& verb) {
    if (o.operands.size() < lo || o.operands.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        if (hi == static_cast<std::size_t>(-1)) want = "at least " + std::to_string(lo);
        throw ore::PreconditionError(verb + " expects " + want + " operand(s), got " +
                                     std::to_string(o.operands.size()));
    }
}

std::string elem_list(const std::vector<ore::OreElem>& elems) {
    std::string out;
    for (const auto& e : elems) out += "  " + ore::format_ore_elem(e) + "\n";
    return out;
}

ore::CentralizerQuery make_query(const ore::OreElem& a, std::size_t max_deg, const Options& o) {
    ore::CentralizerQuery q{a, max_deg, std::nullopt, 2, 2};
    if (o.ycap) q.ydeg_caps = std::vector<std::size_t>(max_deg + 1, *o.ycap);
    return q;
}

Outcome run(const std::string& verb, const Options& o, const ore::ContextPtr& ctx, std::uint64_t seed,
            std::vector<ore::OreElem>& inputs) {
    for (const auto& src : o.operands) inputs.push_back(ore::parse_element(src, ctx));
    Outcome out;

    if (verb == "mul") {
        require_operands(o, 2, 2, verb);
        const ore::OreElem p = inputs[0] * inputs[1];
        out.result = ore::ore_elem_to_json(p);
        out.text = ore::format_ore_elem(p) + "\n";
    } else if (verb == "commutes") {
        require_operands(o, 2, 2, verb);
        const bool c = ore::commutes(inputs[0], inputs[1]);
        out.result = c;
        out.text = c ? "true\n" : "false\n";
    } else if (verb == "chi") {
        require_operands(o, 1, 1, verb);
        out.result = ore::degree_to_json(inputs[0].chi());
        out.text = inputs[0].chi().str() + "\n";
    } else if (verb == "nucleus-check") {
        require_operands(o, 1, 1, verb);
        const auto report = ore::nucleus_check(inputs[0], o.xdeg, o.ydeg);
        out.result = ore::nucleus_report_to_json(report);
        out.result["bounds"] = {o.xdeg, o.ydeg};
        if (report.in_nucleus) {
            out.text = "in nucleus (checked " + std::to_string(report.monomials_checked) +
                       " basis monomials up to x^" + std::to_string(o.xdeg) + ", y^" + std::to_string(o.ydeg) +
                       ")\n";
        } else {
            const auto& w = *report.witness;
            static const char* slots[] = {"(u, v, w)", "(v, u, w)", "(v, w, u)"};
            out.text = "not in nucleus: associator " + std::string(slots[w.slot]) +
                       " is nonzero\n  v = " + ore::format_ore_elem(w.v) + "\n  w = " + ore::format_ore_elem(w.w) +
                       "\n  associator = " + ore::format_ore_elem(w.associator) + "\n";
        }
    } else if (verb == "centralizer") {
        require_operands(o, 1, 1, verb);
        const auto space = ore::centralizer_space(make_query(inputs[0], o.deg, o), o.deg);
        ore::json elems = ore::json::array();
        for (const auto& e : space) elems.push_back(ore::ore_elem_to_json(e));
        out.result = {{"degree", o.deg}, {"dimension", space.size()}, {"basis", elems}};
        out.text = "dimension " + std::to_string(space.size()) + " up to x-degree " + std::to_string(o.deg) +
                   "\n" + elem_list(space);
    } else if (verb == "module-basis") {
        require_operands(o, 1, 1, verb);
        const auto basis = ore::module_basis(make_query(inputs[0], o.max_deg, o));
        out.result = ore::module_basis_to_json(basis);
        out.text = "rank " + std::to_string(basis.elements.size()) + " (bound " +
                   std::to_string(basis.ell * basis.m) + ")\n" + elem_list(basis.elements);
        if (basis.ell == 1) {
            const auto rd = ore::check_rank_divides(basis, basis.m);
            out.result["rank_divides_m"] = rd.holds();
            out.text += std::string("rank divides m: ") + (rd.holds() ? "true" : "false") + "\n";
        }
    } else if (verb == "dcond") {
        require_operands(o, 1, static_cast<std::size_t>(-1), verb);
        const auto cert = ore::check_D_condition(inputs, o.ell.value_or(ctx->dim()));
        out.result = ore::d_certificate_to_json(cert);
        if (cert.dependent) {
            std::string scalars;
            for (const auto& r : cert.scalars) scalars += (scalars.empty() ? "" : ", ") + r.str();
            out.text = "dependent: (" + scalars + ")\n";
        } else {
            out.text = "independent\n";
        }
        out.text += "leading rank " + std::to_string(cert.leading_rank) + "\n";
    } else if (verb == "bc-poly") {
        require_operands(o, 2, 2, verb);
        std::optional<ore::BivarPoly> p;
        std::size_t t_deg = 0, s_deg = 0;
        if (o.max_t || o.max_s) {
            t_deg = o.max_t.value_or(static_cast<std::size_t>(std::max<std::int64_t>(1, inputs[0].chi().value())));
            s_deg = o.max_s.value_or(static_cast<std::size_t>(
                std::max<std::int64_t>(1, inputs[1].is_zero() ? 1 : inputs[1].chi().value())));
            p = ore::annihilating_polynomial(inputs[0], inputs[1], t_deg, s_deg);
        } else {
            const auto r = ore::find_annihilating_polynomial(inputs[0], inputs[1], o.budget);
            p = r.polynomial;
            t_deg = r.max_t_deg;
            s_deg = r.max_s_deg;
        }
        out.result = {{"box", {{"max_t_deg", t_deg}, {"max_s_deg", s_deg}}},
                      {"polynomial", p ? ore::bivar_to_json(*p) : ore::json(nullptr)}};
        out.text = p ? p->str() + "\n" : "none within box (t-degree " + std::to_string(t_deg) + ", s-degree " +
                                            std::to_string(s_deg) + ")\n";
    } else if (verb == "verify-context") {
        require_operands(o, 0, 0, verb);
        const bool ok = ore::verify_sigma_derivation(ctx->algebra(), ctx->sigma(), ctx->delta(), o.samples, seed);
        out.result = {{"sigma_derivation", ok}, {"samples", o.samples}, {"seed", seed},
                      {"associative_coefficients", ctx->algebra().is_associative()}};
        out.text = std::string("sigma-derivation: ") + (ok ? "ok" : "FAILED") + " (" + std::to_string(o.samples) +
                   " samples, seed " + std::to_string(seed) + ")\ncoefficient algebra associative: " +
                   (ctx->algebra().is_associative() ? "true" : "false") + "\n";
        if (!ok) throw ore::PreconditionError("context fails the sigma-Leibniz identity");
    }
    return out;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--ctx", o.ctx, "Context preset: diff-rat, diff-oct or subst-oct")->capture_default_str();
    sub->add_option("--s", o.s, "sigma(y) for subst-oct, a polynomial in y")->capture_default_str();
    sub->add_option("--delta-y", o.delta_y, "delta(y) for subst-oct, a polynomial in y")->capture_default_str();
    sub->add_option("--algebra", o.algebra_file, "JSON file with a structure-constant algebra");
    sub->add_flag("--json", o.json, "Emit a JSON report");
    sub->add_flag("--timing", o.timing, "Include elapsed time in the report");
    sub->add_option("--seed", o.seed, "Seed for randomized checks (overrides ORE_SEED)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in Ore extensions over structure-constant algebras"};
    app.require_subcommand(1);
    Options o;

    struct Verb {
        const char* name;
        const char* help;
        const char* operands;
    };
    const Verb verbs[] = {
        {"mul", "Product of two elements", "A B"},
        {"commutes", "Whether two elements commute", "A B"},
        {"chi", "x-degree of an element", "A"},
        {"nucleus-check", "Bounded nucleus certificate or witness", "A"},
        {"centralizer", "Basis of the centralizer up to a given x-degree", "A"},
        {"module-basis", "Greedy basis of the centralizer as a K[a]-module", "A"},
        {"dcond", "Degree-lowering combination of equal-degree elements", "B1 B2 ..."},
        {"bc-poly", "Annihilating polynomial P(s, t) with P(a, b) = 0", "A B"},
        {"verify-context", "Check the sigma-derivation identity on random samples", ""},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        add_common(sub, o);
        if (*v.operands) sub->add_option("operands", o.operands, v.operands);
        const std::string name = v.name;
        if (name == "nucleus-check") {
            sub->add_option("--xdeg", o.xdeg, "x-degree bound of test monomials")->capture_default_str();
            sub->add_option("--ydeg", o.ydeg, "y-degree bound of test monomials")->capture_default_str();
        } else if (name == "centralizer") {
            sub->add_option("--deg", o.deg, "Largest x-degree")->capture_default_str();
            sub->add_option("--ycap", o.ycap, "y-degree cap for every coefficient (default: automatic)");
        } else if (name == "module-basis") {
            sub->add_option("--max-deg", o.max_deg, "Largest x-degree searched")->capture_default_str();
            sub->add_option("--ycap", o.ycap, "y-degree cap for every coefficient (default: automatic)");
        } else if (name == "dcond") {
            sub->add_option("--ell", o.ell, "Condition index (default: dimension of the coefficient algebra)");
        } else if (name == "bc-poly") {
            sub->add_option("--max-t", o.max_t, "Fixed t-degree box (disables the doubling search)");
            sub->add_option("--max-s", o.max_s, "Fixed s-degree box (disables the doubling search)");
            sub->add_option("--budget", o.budget, "Largest s-degree tried by the doubling search")
                ->capture_default_str();
        } else if (name == "verify-context") {
            sub->add_option("--samples", o.samples, "Number of random pairs")->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string verb = app.get_subcommands().front()->get_name();

    std::vector<ore::OreElem> inputs;
    try {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t seed = resolve_seed(o);
        const ore::ContextPtr ctx = make_context(o, seed);
        const Outcome out = run(verb, o, ctx, seed, inputs);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (o.json) {
            ore::json inputs_json = ore::json::array();
            for (const auto& u : inputs) inputs_json.push_back(ore::format_ore_elem(u));
            ore::json report{{"command", verb},
                             {"context", describe_context(*ctx)},
                             {"inputs", inputs_json},
                             {"result", out.result}};
            if (o.timing) report["timing_ms"] = ms;
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << out.text;
            if (o.timing) std::cout << "time: " << ms << " ms\n";
        }
        return 0;
    } catch (const ore::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ore::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
