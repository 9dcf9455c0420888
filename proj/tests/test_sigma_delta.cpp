#include <gtest/gtest.h>

#include "ore/sigma_delta.hpp"

using ore::AlgebraSpec;
using ore::CoeffPoly;
using ore::DeltaSpec;
using ore::Rat;
using ore::SigmaSpec;

namespace {

CoeffPoly scalar_poly(const AlgebraSpec& spec, std::initializer_list<Rat> coeffs) {
    std::vector<ore::AlgElem> cs;
    for (const auto& c : coeffs) cs.push_back(spec.scalar(c));
    return CoeffPoly(spec.dim(), std::move(cs));
}

}  // namespace

TEST(PolyMul, Examples) {
    const auto q = AlgebraSpec::rationals();
    EXPECT_EQ(ore::poly_mul(q, scalar_poly(q, {1, 1}), scalar_poly(q, {-1, 1})), scalar_poly(q, {-1, 0, 1}));

    const auto o = AlgebraSpec::octonions();
    const CoeffPoly e1y = CoeffPoly::monomial(o.basis(1), 1);
    const CoeffPoly e2y = CoeffPoly::monomial(o.basis(2), 1);
    EXPECT_EQ(ore::poly_mul(o, e1y, e2y), CoeffPoly::monomial(o.mul(o.basis(1), o.basis(2)), 2));

    ore::Rng rng(1);
    const CoeffPoly p = ore::random_coeff_poly(rng, o, 4);
    EXPECT_EQ(ore::poly_mul(o, p, CoeffPoly::constant(o.unit())), p);
    EXPECT_THROW(ore::poly_mul(o, p, scalar_poly(q, {1})), ore::PreconditionError);
}

TEST(PolyMul, DegreesAddOverDivisionAlgebra) {
    const auto o = AlgebraSpec::octonions();
    ore::Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const CoeffPoly p = ore::random_coeff_poly(rng, o, 4), q = ore::random_coeff_poly(rng, o, 4);
        EXPECT_EQ(ore::poly_mul(o, p, q).ydeg(), p.ydeg() + q.ydeg());
    }
}

TEST(ApplySigma, Examples) {
    const auto o = AlgebraSpec::octonions();
    const auto sigma = SigmaSpec::substitution({0, 0, 1});  // y -> y^2
    EXPECT_EQ(ore::apply_sigma(sigma, scalar_poly(o, {1, 1})), scalar_poly(o, {1, 0, 1}));
    EXPECT_EQ(ore::apply_sigma(sigma, CoeffPoly::monomial(o.basis(3), 2)), CoeffPoly::monomial(o.basis(3), 4));
    ore::Rng rng(3);
    const CoeffPoly p = ore::random_coeff_poly(rng, o, 3);
    EXPECT_EQ(ore::apply_sigma(SigmaSpec::identity(), p), p);
    EXPECT_EQ(sigma.s(), 2u);
    EXPECT_THROW(SigmaSpec::substitution({3}), ore::PreconditionError);
    EXPECT_THROW(SigmaSpec::substitution(o, CoeffPoly::monomial(o.basis(1), 2)), ore::PreconditionError);
}

TEST(ApplySigma, IsARingMap) {
    const auto o = AlgebraSpec::octonions();
    const auto sigma = SigmaSpec::substitution({1, 2, 1});  // y -> (y+1)^2
    ore::Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const CoeffPoly p = ore::random_coeff_poly(rng, o, 3), q = ore::random_coeff_poly(rng, o, 3);
        EXPECT_EQ(ore::apply_sigma(sigma, p + q), ore::apply_sigma(sigma, p) + ore::apply_sigma(sigma, q));
        EXPECT_EQ(ore::apply_sigma(sigma, ore::poly_mul(o, p, q)),
                  ore::poly_mul(o, ore::apply_sigma(sigma, p), ore::apply_sigma(sigma, q)));
    }
}

TEST(ApplyDelta, Examples) {
    const auto o = AlgebraSpec::octonions();
    const auto id = SigmaSpec::identity();
    EXPECT_EQ(ore::apply_delta(o, DeltaSpec::d_dy(), id, CoeffPoly::monomial(o.basis(5), 3)),
              CoeffPoly::monomial(Rat(3) * o.basis(5), 2));
    EXPECT_TRUE(ore::apply_delta(o, DeltaSpec::d_dy(), id, CoeffPoly::constant(o.basis(2))).is_zero());

    const auto q = AlgebraSpec::rationals();
    const auto sq = SigmaSpec::substitution({0, 0, 1});
    const auto twisted = DeltaSpec::sigma_twisted(scalar_poly(q, {1}));
    EXPECT_TRUE(ore::apply_delta(q, twisted, sq, scalar_poly(q, {5})).is_zero());
    // delta(y^2) = sigma(y) delta(y) + delta(y) y = y^2 + y
    EXPECT_EQ(ore::apply_delta(q, twisted, sq, scalar_poly(q, {0, 0, 1})), scalar_poly(q, {0, 1, 1}));

    EXPECT_THROW(ore::apply_delta(q, DeltaSpec::d_dy(), sq, scalar_poly(q, {0, 1})), ore::PreconditionError);
}

TEST(ApplyDelta, IsAdditive) {
    const auto o = AlgebraSpec::octonions();
    const auto sq = SigmaSpec::substitution({0, 0, 1});
    const auto twisted = DeltaSpec::sigma_twisted(scalar_poly(o, {1, 0, 3}));
    ore::Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        const CoeffPoly p = ore::random_coeff_poly(rng, o, 4), q = ore::random_coeff_poly(rng, o, 4);
        EXPECT_EQ(ore::apply_delta(o, twisted, sq, p + q),
                  ore::apply_delta(o, twisted, sq, p) + ore::apply_delta(o, twisted, sq, q));
    }
}

TEST(VerifySigmaDerivation, AcceptsGenuineDerivations) {
    const auto o = AlgebraSpec::octonions();
    const auto q = AlgebraSpec::rationals();
    EXPECT_TRUE(ore::verify_sigma_derivation(o, SigmaSpec::identity(), DeltaSpec::d_dy(), 30, 1));
    EXPECT_TRUE(ore::verify_sigma_derivation(o, SigmaSpec::substitution({0, 0, 1}), DeltaSpec::zero(), 30, 1));
    EXPECT_TRUE(ore::verify_sigma_derivation(q, SigmaSpec::identity(), DeltaSpec::zero(), 30, 1));
    EXPECT_TRUE(ore::verify_sigma_derivation(o, SigmaSpec::substitution({0, 0, 1}),
                                             DeltaSpec::sigma_twisted(scalar_poly(o, {1})), 30, 1));
    EXPECT_TRUE(ore::verify_sigma_derivation(o, SigmaSpec::substitution({2, 1, 0, 1}),
                                             DeltaSpec::sigma_twisted(scalar_poly(o, {0, -1, 1})), 30, 2));
}

TEST(VerifySigmaDerivation, RejectsCorruptedTable) {
    const auto o = AlgebraSpec::octonions();
    std::vector<CoeffPoly> table;
    for (std::size_t k = 0; k < 8; ++k)
        table.push_back(k == 0 ? CoeffPoly(o.dim()) : CoeffPoly::monomial(o.scalar(Rat(static_cast<int64_t>(k))), k - 1));
    // untouched table is d/dy on degrees below 8
    EXPECT_TRUE(ore::verify_sigma_derivation(o, SigmaSpec::identity(), DeltaSpec::table(table), 30, 3));
    table[3] = CoeffPoly::monomial(o.scalar(4), 2);
    EXPECT_FALSE(ore::verify_sigma_derivation(o, SigmaSpec::identity(), DeltaSpec::table(table), 30, 3));
}

TEST(VerifySigmaDerivation, RejectsNonCentralTwist) {
    // delta(y) = e1 does not extend to a sigma-derivation of O[y]
    const auto o = AlgebraSpec::octonions();
    EXPECT_FALSE(ore::verify_sigma_derivation(o, SigmaSpec::substitution({0, 0, 1}),
                                              DeltaSpec::sigma_twisted(CoeffPoly::constant(o.basis(1))), 10, 4));
}
