#include <gtest/gtest.h>

#include "ore/format.hpp"
#include "ore/parser.hpp"

using ore::OreContext;
using ore::OreElem;
using ore::parse_element;
using ore::Rat;

TEST(Parser, Examples) {
    const auto diff = OreContext::diff_rat();
    const OreElem x = OreElem::x(diff), y = OreElem::y(diff);
    EXPECT_EQ(parse_element("x*y", diff), y * x + OreElem::one(diff));
    EXPECT_EQ(ore::format_ore_elem(parse_element("x*y", diff)), "y*x + 1");

    const auto oct = OreContext::diff_oct();
    EXPECT_EQ(parse_element("e1*e1", oct), OreElem::scalar(oct, Rat(-1)));
    EXPECT_EQ(ore::format_ore_elem(parse_element("e1*e1", oct)), "-1");

    const OreElem zero = parse_element("0", diff);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_TRUE(zero.chi().is_neg_infinity());
}

TEST(Parser, PrecedenceAndLiterals) {
    const auto diff = OreContext::diff_rat();
    const OreElem x = OreElem::x(diff), y = OreElem::y(diff);
    EXPECT_EQ(parse_element("x^2", diff), x * x);
    EXPECT_EQ(parse_element("2*x^2 - 1/3*y", diff), Rat(2) * (x * x) - Rat(1, 3) * y);
    EXPECT_EQ(parse_element("-x + y", diff), y - x);
    EXPECT_EQ(parse_element("(x + y)^2", diff), (x + y) * (x + y));
    EXPECT_EQ(parse_element("x * -y", diff), -(x * y));
    EXPECT_EQ(parse_element("(y*x)^2", diff), ore::left_power(y * x, 2));
    EXPECT_EQ(parse_element("  4 / 6 ", diff), OreElem::scalar(diff, Rat(2, 3)));
    EXPECT_EQ(parse_element("x^0", diff), OreElem::one(diff));
    EXPECT_EQ(parse_element("e0*x", diff), x);
}

TEST(Parser, GroupingIsPreserved) {
    const auto oct = OreContext::diff_oct();
    const OreElem left = parse_element("(e1*e2)*e4", oct), right = parse_element("e1*(e2*e4)", oct);
    EXPECT_NE(left, right);
    EXPECT_EQ(parse_element("e1*e2*e4", oct), left);
}

TEST(Parser, Errors) {
    const auto diff = OreContext::diff_rat();
    auto position = [&](const std::string& src) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_element(src, diff);
        } catch (const ore::SyntaxError& e) {
            return {e.line(), e.column()};
        }
        ADD_FAILURE() << "no error for " << src;
        return {0, 0};
    };
    EXPECT_EQ(position("x + "), std::make_pair(std::size_t{1}, std::size_t{5}));
    EXPECT_EQ(position("x ++ y"), std::make_pair(std::size_t{1}, std::size_t{4}));
    EXPECT_EQ(position("(x"), std::make_pair(std::size_t{1}, std::size_t{3}));
    EXPECT_EQ(position("x\n + e3"), std::make_pair(std::size_t{2}, std::size_t{4}));
    EXPECT_EQ(position("x^y"), std::make_pair(std::size_t{1}, std::size_t{3}));
    EXPECT_EQ(position("1/0"), std::make_pair(std::size_t{1}, std::size_t{3}));
    EXPECT_EQ(position(""), std::make_pair(std::size_t{1}, std::size_t{1}));
    EXPECT_EQ(position("x y"), std::make_pair(std::size_t{1}, std::size_t{3}));
    EXPECT_THROW(parse_element("x $", diff), ore::PreconditionError);
}

TEST(Format, CanonicalText) {
    const auto oct = OreContext::diff_oct();
    const auto& o = oct->algebra();
    EXPECT_EQ(ore::format_ore_elem(OreElem::monomial(oct, Rat(3) * o.basis(5), 2, 0)), "3*e5*y^2");
    EXPECT_EQ(ore::format_ore_elem(OreElem::monomial(oct, -o.basis(1), 0, 1)), "-e1*x");
    EXPECT_EQ(ore::format_ore_elem(OreElem::monomial(oct, o.basis(1) - o.basis(2), 1, 1)), "(e1 - e2)*y*x");
    EXPECT_EQ(ore::format_ore_elem(OreElem::monomial(oct, o.basis(0) - o.basis(2), 0, 0)), "(1 - e2)");
    EXPECT_EQ(ore::format_ore_elem(OreElem::monomial(oct, o.scalar(Rat(-1, 2)), 0, 3)), "-1/2*x^3");
    EXPECT_EQ(ore::format_ore_elem(parse_element("x^2 + y*x + 1 - y", oct)), "x^2 + y*x - y + 1");
}

TEST(Format, RoundTrip) {
    ore::Rng rng(11);
    for (const auto& ctx :
         {OreContext::diff_rat(), OreContext::diff_oct(), OreContext::subst_oct({0, 0, 1}, {1})}) {
        for (int t = 0; t < 100; ++t) {
            const OreElem u = ore::random_ore_elem(rng, ctx, 3, 3, t % 2 == 0);
            const std::string text = ore::format_ore_elem(u);
            const OreElem back = parse_element(text, ctx);
            EXPECT_EQ(back, u) << text;
            EXPECT_EQ(ore::format_ore_elem(back), text);
        }
    }
}
