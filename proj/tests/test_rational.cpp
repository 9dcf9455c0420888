#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "ore/rational.hpp"

using ore::Rat;

TEST(Rat, CanonicalForm) {
    EXPECT_EQ(Rat(2, 4), Rat(1, 2));
    EXPECT_EQ(Rat(3, -6).str(), "-1/2");
    EXPECT_EQ(Rat(0, 7).str(), "0");
    EXPECT_EQ(Rat(0, -7), Rat());
    EXPECT_EQ(Rat(10, 5).str(), "2");
    EXPECT_THROW(Rat(1, 0), ore::PreconditionError);
}

TEST(Rat, Parse) {
    EXPECT_EQ(Rat::parse("-2/3"), Rat(-2, 3));
    EXPECT_EQ(Rat::parse(" 4/6 "), Rat(2, 3));
    EXPECT_EQ(Rat::parse("17"), Rat(17));
    EXPECT_EQ(Rat::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
    EXPECT_THROW(Rat::parse("1/0"), ore::PreconditionError);
    EXPECT_THROW(Rat::parse("1.5"), ore::PreconditionError);
    EXPECT_THROW(Rat::parse(""), ore::PreconditionError);
    EXPECT_THROW(Rat::parse("/3"), ore::PreconditionError);
}

TEST(Rat, Arithmetic) {
    EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
    EXPECT_EQ(Rat(1, 2) - Rat(1, 3), Rat(1, 6));
    EXPECT_EQ(Rat(2, 3) * Rat(9, 4), Rat(3, 2));
    EXPECT_EQ(Rat(2, 3) / Rat(4, 9), Rat(3, 2));
    EXPECT_EQ(-Rat(2, 3), Rat(-2, 3));
    EXPECT_EQ(Rat(-3, 4).inverse(), Rat(-4, 3));
    EXPECT_THROW(Rat().inverse(), ore::PreconditionError);
    EXPECT_LT(Rat(1, 3), Rat(1, 2));
    EXPECT_GT(Rat(-1, 3), Rat(-1, 2));
}

TEST(Rat, OverflowSpillsToBigAndBack) {
    const Rat big(std::numeric_limits<std::int64_t>::max());
    const Rat sum = big + big;
    EXPECT_EQ(sum.str(), "18446744073709551614");
    EXPECT_EQ(sum - big, big);
    const Rat sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ((sq - sq), Rat());
    EXPECT_TRUE((sq - sq).is_zero());
    const Rat tiny(1, std::numeric_limits<std::int64_t>::max());
    EXPECT_EQ((tiny * tiny).inverse(), sq);
    EXPECT_EQ(Rat(std::numeric_limits<std::int64_t>::min()).str(), "-9223372036854775808");
    EXPECT_EQ(-Rat(std::numeric_limits<std::int64_t>::min()), big + Rat(1));
}

// Field identities against GMP directly, on values straddling the inline
// range so both representations are exercised.
TEST(Rat, AgreesWithGmp) {
    const std::int64_t samples[] = {0, 1, -1, 7, -13, 1LL << 40, -(1LL << 62), std::numeric_limits<std::int64_t>::max()};
    for (auto an : samples)
        for (auto ad : {1LL, 3LL, 1LL << 33})
            for (auto bn : samples)
                for (auto bd : {1LL, 5LL, (1LL << 31) + 1}) {
                    const Rat a(an, ad), b(bn, bd);
                    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
                    EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
                    EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
                    EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
                    if (!b.is_zero()) {
                        EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
                    }
                    EXPECT_EQ(a < b, qa < qb);
                    EXPECT_EQ(a == b, qa == qb);
                }
}
