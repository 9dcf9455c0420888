#include <gtest/gtest.h>

#include "ore/algebra.hpp"
#include "ore/coeff_poly.hpp"
#include "ore/random.hpp"

using ore::AlgebraSpec;
using ore::AlgElem;
using ore::Rat;
using ore::RatVector;

namespace {

// Test-only oracle: Cayley-Dickson product evaluated recursively on raw
// coordinate vectors, never touching structure constants.
RatVector cd_conj(const RatVector& a) {
    if (a.size() == 1) return a;
    const std::size_t h = a.size() / 2;
    RatVector p(a.begin(), a.begin() + h), q(a.begin() + h, a.end());
    RatVector out = cd_conj(p);
    for (auto& c : q) out.push_back(-c);
    return out;
}

RatVector cd_add(const RatVector& a, const RatVector& b, bool subtract = false) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = subtract ? a[i] - b[i] : a[i] + b[i];
    return out;
}

RatVector cd_mul(const RatVector& a, const RatVector& b) {
    if (a.size() == 1) return {a[0] * b[0]};
    const std::size_t h = a.size() / 2;
    RatVector p(a.begin(), a.begin() + h), q(a.begin() + h, a.end());
    RatVector r(b.begin(), b.begin() + h), s(b.begin() + h, b.end());
    RatVector first = cd_add(cd_mul(p, r), cd_mul(cd_conj(s), q), true);
    RatVector second = cd_add(cd_mul(s, p), cd_mul(q, cd_conj(r)));
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

}  // namespace

TEST(CayleyDickson, ComplexesFromRationals) {
    const auto c = AlgebraSpec::complexes();
    ASSERT_EQ(c.dim(), 2u);
    EXPECT_EQ(c.mul(c.basis(1), c.basis(1)), -c.unit());
}

TEST(CayleyDickson, QuaternionsFromComplexes) {
    const auto h = AlgebraSpec::quaternions();
    ASSERT_EQ(h.dim(), 4u);
    EXPECT_EQ(h.mul(h.basis(1), h.basis(2)), h.basis(3));
    EXPECT_EQ(h.mul(h.basis(2), h.basis(1)), -h.basis(3));
    EXPECT_EQ(h.commutator(h.basis(1), h.basis(2)), Rat(2) * h.basis(3));
}

TEST(CayleyDickson, OctonionsMatchRecursiveOracle) {
    const auto o = AlgebraSpec::octonions();
    ASSERT_EQ(o.dim(), 8u);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            EXPECT_EQ(o.mul(o.basis(i), o.basis(j)), AlgElem(cd_mul(o.basis(i).coords(), o.basis(j).coords())))
                << "e" << i << " e" << j;
    ore::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const AlgElem a = ore::random_alg_elem(rng, o), b = ore::random_alg_elem(rng, o);
        EXPECT_EQ(o.mul(a, b), AlgElem(cd_mul(a.coords(), b.coords())));
    }
    EXPECT_EQ(o.mul(o.basis(1), o.basis(1)), -o.unit());
}

TEST(CayleyDickson, RejectsAlgebraWithoutConjugation) {
    AlgebraSpec custom({"u", "v"}, 0, {1, 0, 0, 1, 0, 1, 0, 0}, std::nullopt, "dual numbers");
    EXPECT_THROW(ore::cayley_dickson_double(custom), ore::PreconditionError);
}

TEST(Associator, UnitAndAssociativeAlgebras) {
    for (const auto& alg : {AlgebraSpec::rationals(), AlgebraSpec::quaternions()}) {
        EXPECT_TRUE(alg.is_associative()) << alg.label();
    }
    const auto o = AlgebraSpec::octonions();
    EXPECT_FALSE(o.is_associative());
    ore::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const AlgElem a = ore::random_alg_elem(rng, o), b = ore::random_alg_elem(rng, o);
        EXPECT_TRUE(o.associator(o.unit(), a, b).is_zero());
        EXPECT_TRUE(o.associator(a, o.unit(), b).is_zero());
        EXPECT_TRUE(o.associator(a, b, o.unit()).is_zero());
    }
    // {e1, e2, e4} generate all of O, so they cannot associate
    EXPECT_FALSE(o.associator(o.basis(1), o.basis(2), o.basis(4)).is_zero());
}

TEST(Commutator, Basics) {
    const auto o = AlgebraSpec::octonions();
    ore::Rng rng(5);
    const AlgElem a = ore::random_alg_elem(rng, o);
    EXPECT_TRUE(o.commutator(a, a).is_zero());
    EXPECT_TRUE(o.commutator(o.unit(), a).is_zero());
}

TEST(Mul, UnitZeroAndMismatch) {
    const auto o = AlgebraSpec::octonions();
    ore::Rng rng(8);
    const AlgElem a = ore::random_alg_elem(rng, o);
    EXPECT_EQ(o.mul(o.unit(), a), a);
    EXPECT_TRUE(o.mul(o.zero(), a).is_zero());
    EXPECT_THROW(o.mul(AlgebraSpec::quaternions().unit(), a), ore::PreconditionError);
}

TEST(Octonions, AlternativeAndComposition) {
    const auto o = AlgebraSpec::octonions();
    ore::Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        const AlgElem a = ore::random_alg_elem(rng, o, 80), b = ore::random_alg_elem(rng, o, 80);
        EXPECT_TRUE(o.associator(a, a, b).is_zero());
        EXPECT_TRUE(o.associator(a, b, b).is_zero());
        EXPECT_EQ(o.norm(o.mul(a, b)), o.norm(a) * o.norm(b));
    }
}

TEST(Octonions, ScalarsAreCentralAndAssociative) {
    const auto o = AlgebraSpec::octonions();
    ore::Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        const AlgElem r = o.scalar(rng.rational(7, 5));
        const AlgElem a = ore::random_alg_elem(rng, o), b = ore::random_alg_elem(rng, o);
        EXPECT_TRUE(o.commutator(r, a).is_zero());
        EXPECT_TRUE(o.associator(r, a, b).is_zero());
        EXPECT_TRUE(o.associator(a, r, b).is_zero());
        EXPECT_TRUE(o.associator(a, b, r).is_zero());
    }
}

TEST(AlgebraSpec, ValidatesUnitLaw) {
    // e0*e0 = 0 breaks the unit law
    EXPECT_THROW(AlgebraSpec({"e0"}, 0, {0}), ore::PreconditionError);
    EXPECT_THROW(AlgebraSpec({"e0", "e1"}, 0, {1}), ore::PreconditionError);
    EXPECT_THROW(AlgebraSpec({"e0"}, 3, {1}), ore::PreconditionError);
}
