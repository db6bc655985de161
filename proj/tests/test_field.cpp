#include <gtest/gtest.h>

#include <cmath>

#include "quasitoric/field.hpp"
#include "support.hpp"

using namespace quasitoric;
using quasitoric::testing::kSeed;
using quasitoric::testing::random_element;
using quasitoric::testing::sqrt_field;

namespace {

Field quartic_field()
{
    // x^4 - 10x^2 + 5
    return RealAlgebraicField::create({Rational(5), Rational(0), Rational(-10), Rational(0), Rational(1)},
                                      Rational(3), Rational(4));
}

// Independent root oracle: plain rational bisection on the quartic.
Rational bisect_quartic(Rational lo, Rational hi, int steps)
{
    auto p = [](const Rational& x) -> Rational { return x * x * x * x - 10 * x * x + 5; };
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / 2;
        if (sgn(p(lo)) * sgn(p(mid)) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

} // namespace

TEST(FieldCreate, SqrtFiveIsolated)
{
    Field f = sqrt_field(5, 2, 3);
    EXPECT_EQ(f->degree(), 2u);
    auto iv = f->interval();
    EXPECT_LE(iv.lo * iv.lo, 5);
    EXPECT_GE(iv.hi * iv.hi, 5);
    EXPECT_NEAR(FieldElement::generator(f).to_double(), std::sqrt(5.0), 1e-14);
}

TEST(FieldCreate, RejectsRepeatedFactor)
{
    try {
        RealAlgebraicField::create({Rational(4), Rational(-4), Rational(1)}, Rational(1), Rational(3));
        FAIL() << "expected NotSquarefree";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquarefree);
    }
}

TEST(FieldCreate, RootCountErrors)
{
    try {
        sqrt_field(5, 3, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoRootInInterval);
    }
    try {
        sqrt_field(5, -3, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MultipleRootsInInterval);
    }
}

TEST(FieldCreate, QuarticRootMatchesBisectionOracle)
{
    Field f = quartic_field();
    const double oracle = bisect_quartic(3, 4, 80).get_d();
    EXPECT_NEAR(oracle, std::tan(2 * M_PI / 5), 1e-12);
    EXPECT_NEAR(FieldElement::generator(f).to_double(), oracle, 1e-13);
}

TEST(FieldCreate, RationalEndpointRoot)
{
    Field f = RealAlgebraicField::create({Rational(-2), Rational(1)}, Rational(2), Rational(3));
    EXPECT_TRUE(f->exact());
    EXPECT_EQ(FieldElement::generator(f).rational_value(), 2);
}

TEST(FieldArith, GoldenRatioSquare)
{
    Field f = sqrt_field(5, 2, 3);
    FieldElement a = FieldElement::generator(f);
    FieldElement phi = (FieldElement(1) + a) / FieldElement(2);
    FieldElement sq = phi * phi;
    EXPECT_EQ(sq, phi + FieldElement(1));
    EXPECT_EQ(sq.coefficients(), (std::vector<Rational>{Rational(3, 2), Rational(1, 2)}));
}

TEST(FieldArith, InverseOfGenerator)
{
    Field f = sqrt_field(5, 2, 3);
    FieldElement a = FieldElement::generator(f);
    EXPECT_EQ(a.inverse(), a / FieldElement(5));
    EXPECT_EQ(a * a.inverse(), FieldElement(1));
}

TEST(FieldArith, DivisionByZero)
{
    Field f = sqrt_field(5, 2, 3);
    try {
        FieldElement(f, {Rational(0), Rational(0)}).inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
}

TEST(FieldArith, MixedFieldsRejected)
{
    FieldElement a = FieldElement::generator(sqrt_field(5, 2, 3));
    FieldElement b = FieldElement::generator(sqrt_field(2, 1, 2));
    try {
        (void)(a + b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MixedFields);
    }
    // Two handles declared identically are the same field.
    FieldElement c = FieldElement::generator(sqrt_field(5, 2, 3));
    EXPECT_EQ(a - c, FieldElement(0));
}

TEST(FieldArith, ReducibleModulusSurfacesAsNotInvertible)
{
    // (x^2 - 2)(x^2 - 3) is squarefree but reducible; root sqrt(2) isolated in [1, 3/2].
    Field f = RealAlgebraicField::create({Rational(6), Rational(0), Rational(-5), Rational(0), Rational(1)},
                                         Rational(1), Rational(3, 2));
    FieldElement zero_divisor(f, {Rational(-2), Rational(0), Rational(1)});
    try {
        zero_divisor.inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
    try {
        (void)zero_divisor.sign();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
}

TEST(FieldSign, Examples)
{
    Field f = sqrt_field(5, 2, 3);
    FieldElement a = FieldElement::generator(f);
    EXPECT_EQ((a - FieldElement(2)).sign(), 1);
    EXPECT_EQ(FieldElement(0).sign(), 0);
    FieldElement phi = (FieldElement(1) + a) / FieldElement(2);
    EXPECT_EQ((phi * phi - phi - FieldElement(1)).sign(), 0);
    // Needs refinement well past the working interval: sqrt5 - 2.2360679774997896964 > 0.
    FieldElement close = a - FieldElement(parse_rational("22360679774997896964/10000000000000000000"));
    EXPECT_EQ(close.sign(), 1);
}

TEST(FieldSign, FloorAndFractionalPart)
{
    Field f = sqrt_field(2, 1, 2);
    FieldElement a = FieldElement::generator(f);
    EXPECT_EQ(a.floor(), 1);
    EXPECT_EQ((-a).floor(), -2);
    EXPECT_EQ((a * FieldElement(100)).floor(), 141);
}

TEST(FieldProperties, AxiomsAndSignMultiplicativity)
{
    std::mt19937_64 rng(kSeed);
    const Field fields[] = {sqrt_field(5, 2, 3), quartic_field()};
    for (int i = 0; i < 1000; ++i) {
        const Field& f = fields[i % 2];
        FieldElement x = random_element(rng, f), y = random_element(rng, f), z = random_element(rng, f);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x + (-x), FieldElement(0));
        if (!x.is_zero())
            ASSERT_EQ(x * x.inverse(), FieldElement(1));
        if (!x.is_zero() && !y.is_zero())
            ASSERT_EQ(x.sign() * y.sign(), (x * y).sign());
        if (x < y)
            ASSERT_TRUE(x + z < y + z);
        // The real embedding agrees with a floating evaluation.
        const double fx = x.to_double();
        if (std::abs(fx) > 1e-9)
            ASSERT_EQ(x.sign(), fx > 0 ? 1 : -1);
    }
}

TEST(FieldProperties, RefinementIsMonotone)
{
    Field f = quartic_field();
    auto prev = f->interval();
    for (int i = 0; i < 64; ++i) {
        f = f->refined();
        auto iv = f->interval();
        ASSERT_GE(iv.lo, prev.lo);
        ASSERT_LE(iv.hi, prev.hi);
        ASSERT_LT(iv.hi - iv.lo, prev.hi - prev.lo);
        auto p = [](const Rational& x) -> Rational { return x * x * x * x - 10 * x * x + 5; };
        ASSERT_LE(sgn(p(iv.lo)) * sgn(p(iv.hi)), 0);
        prev = iv;
    }
}
