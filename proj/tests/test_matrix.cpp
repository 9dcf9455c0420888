#include <gtest/gtest.h>

#include "ore/matrix.hpp"
#include "ore/random.hpp"

using ore::Rat;
using ore::RatMatrix;
using ore::RatVector;

TEST(Rref, RankOne) {
    auto [r, pivots] = ore::rref(RatMatrix{{1, 2}, {2, 4}});
    EXPECT_EQ(r, (RatMatrix{{1, 2}, {0, 0}}));
    EXPECT_EQ(pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, ZeroMatrix) {
    auto [r, pivots] = ore::rref(RatMatrix{{0, 0}, {0, 0}});
    EXPECT_EQ(r, (RatMatrix{{0, 0}, {0, 0}}));
    EXPECT_TRUE(pivots.empty());
}

TEST(Rref, InvertibleDiagonal) {
    auto [r, pivots] = ore::rref(RatMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(r, (RatMatrix{{1, 0}, {0, 1}}));
    EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Nullspace, Examples) {
    auto one = ore::nullspace_basis(RatMatrix{{1, 2}});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (RatVector{-2, 1}));

    RatMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = 1;
    EXPECT_TRUE(ore::nullspace_basis(id).empty());

    auto ones = ore::nullspace_basis(RatMatrix{{1, 1}, {1, 1}});
    ASSERT_EQ(ones.size(), 1u);
    EXPECT_EQ(ones[0], (RatVector{-1, 1}));
}

TEST(InSpan, Examples) {
    auto c = ore::in_span(RatVector{2, 4}, {RatVector{1, 2}});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (RatVector{2}));
    EXPECT_FALSE(ore::in_span(RatVector{1, 0}, {RatVector{0, 1}}));
    auto empty = ore::in_span(RatVector{0, 0}, {});
    ASSERT_TRUE(empty);
    EXPECT_TRUE(empty->empty());
}

namespace {
RatMatrix random_matrix(ore::Rng& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    // low rank on purpose: some rows are combinations of others
    for (std::size_t r = 0; r < rows; ++r) {
        if (r >= 2 && rng.chance(40)) {
            const Rat a = rng.rational(3, 2), b = rng.rational(3, 2);
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = a * m(r - 1, c) + b * m(r - 2, c);
        } else {
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.chance(60)) m(r, c) = rng.rational(9, 4);
        }
    }
    return m;
}
}  // namespace

TEST(MatrixProperties, RandomMatrices) {
    ore::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 6));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 7));
        const RatMatrix m = random_matrix(rng, rows, cols);
        const auto first = ore::rref(m);
        const auto second = ore::rref(first.reduced);
        EXPECT_EQ(second.reduced, first.reduced);
        EXPECT_EQ(second.pivots, first.pivots);

        const auto kernel = ore::nullspace_basis(m);
        EXPECT_EQ(first.pivots.size() + kernel.size(), cols);
        for (const auto& v : kernel)
            for (const auto& e : m.multiply(v)) EXPECT_TRUE(e.is_zero());

        // each row of m lies in the span of the rows of its rref
        std::vector<RatVector> rref_rows;
        for (std::size_t r = 0; r < first.pivots.size(); ++r) {
            auto row = first.reduced.row(r);
            rref_rows.emplace_back(row.begin(), row.end());
        }
        for (std::size_t r = 0; r < rows; ++r) {
            auto row = m.row(r);
            EXPECT_TRUE(ore::in_span(RatVector(row.begin(), row.end()), rref_rows));
        }
    }
}

TEST(LinearSpan, TracksDimension) {
    using ore::SparseVector;
    ore::LinearSpan span;
    auto sv = [](std::map<std::size_t, Rat> m) { return SparseVector(std::move(m)); };
    EXPECT_TRUE(span.insert(sv({{0, 1}, {3, 2}})));
    EXPECT_TRUE(span.insert(sv({{1, 1}})));
    EXPECT_FALSE(span.insert(sv({{0, 2}, {1, 5}, {3, 4}})));
    EXPECT_TRUE(span.contains(sv({})));
    EXPECT_FALSE(span.contains(sv({{3, 1}})));
    EXPECT_TRUE(span.insert(sv({{3, 1}})));
    EXPECT_TRUE(span.contains(sv({{0, 1}})));
    EXPECT_EQ(span.dimension(), 3u);
}
