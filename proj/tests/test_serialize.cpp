#include <gtest/gtest.h>

#include "ore/parser.hpp"
#include "ore/serialize.hpp"

using ore::AlgebraSpec;
using ore::json;
using ore::OreContext;
using ore::OreElem;
using ore::Rat;

TEST(Serialize, AlgebraRoundTrip) {
    for (const auto& spec : {AlgebraSpec::rationals(), AlgebraSpec::quaternions(), AlgebraSpec::octonions()}) {
        const json j = ore::algebra_to_json(spec);
        EXPECT_EQ(j.at("dim"), spec.dim());
        const AlgebraSpec back = ore::algebra_from_json(json::parse(j.dump()));
        EXPECT_EQ(back, spec);
        EXPECT_EQ(back.label(), spec.label());
        EXPECT_EQ(back.conjugation(), spec.conjugation());
    }
}

TEST(Serialize, CustomAlgebraWithIntegerConstants) {
    // dual numbers Q[eps]/(eps^2)
    const json j = json::parse(R"({"names": ["one", "eps"], "unit": 0,
        "constants": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]})");
    const AlgebraSpec dual = ore::algebra_from_json(j);
    EXPECT_EQ(dual.dim(), 2u);
    EXPECT_TRUE(dual.mul(dual.basis(1), dual.basis(1)).is_zero());
    EXPECT_FALSE(dual.conjugation());
}

TEST(Serialize, AlgebraErrors) {
    EXPECT_THROW(ore::algebra_from_json(json::parse(R"({"names": ["x"], "constants": [[[1]]]})")),
                 ore::PreconditionError);
    EXPECT_THROW(ore::algebra_from_json(json::parse(R"({"names": ["a", "b"], "constants": [[[1]]]})")),
                 ore::PreconditionError);
    EXPECT_THROW(ore::algebra_from_json(json::parse(R"({"constants": [[[1]]]})")), ore::PreconditionError);
    EXPECT_THROW(ore::algebra_from_json(json::parse(R"({"names": ["u"], "constants": [[[2]]]})")),
                 ore::PreconditionError);
    EXPECT_THROW(ore::algebra_from_json(json::parse(R"({"names": ["u"], "constants": [[["1/0"]]]})")),
                 ore::PreconditionError);
}

TEST(Serialize, ElementRoundTrip) {
    ore::Rng rng(12);
    const auto ctx = OreContext::diff_oct();
    for (int t = 0; t < 30; ++t) {
        const OreElem u = ore::random_ore_elem(rng, ctx, 3, 2);
        const json j = ore::ore_elem_to_json(u);
        EXPECT_EQ(j.at("text"), ore::format_ore_elem(u));
        EXPECT_EQ(ore::ore_elem_from_json(json::parse(j.dump()), ctx), u);
    }
    EXPECT_EQ(ore::ore_elem_to_json(OreElem::zero(ctx)).at("chi"), "-inf");
    const json x = ore::ore_elem_to_json(ore::parse_element("1/2*e3*y*x", ctx));
    EXPECT_EQ(x.at("chi"), 1);
    EXPECT_EQ(x.at("coeffs").size(), 1u);
    EXPECT_EQ(x.at("coeffs")[0].at("c")[3], "1/2");
}

TEST(Serialize, BivarPoly) {
    const ore::BivarPoly p = ore::BivarPoly::monomial(Rat(1), 0, 3) + ore::BivarPoly::monomial(Rat(-1), 2, 0);
    const json j = ore::bivar_to_json(p);
    EXPECT_EQ(j.at("text"), "s^3 - t^2");
    EXPECT_EQ(j.at("terms").dump(), R"([{"c":"1","i":0,"j":3},{"c":"-1","i":2,"j":0}])");
    EXPECT_EQ(ore::bivar_from_json(j), p);
}
