#include "oracles.hpp"
#include "support.hpp"

#include "torus/polyring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace torus;

TEST(IntPolynomial, TrimsAndReportsDegree) {
    const IntPolynomial zero({0, 0, 0});
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), -1);
    const IntPolynomial f({1, 2, 0, 0});
    EXPECT_EQ(f.degree(), 1);
    EXPECT_EQ(f.coeff(5), 0);
    EXPECT_EQ(IntPolynomial::binomial(3), IntPolynomial({-1, 0, 0, 1}));
    EXPECT_EQ(IntPolynomial::geometric(3), IntPolynomial({1, 1, 1}));
    EXPECT_EQ(IntPolynomial({1, -1, 1}).to_string(), "t^2 - t + 1");
}

TEST(PolyMul, Examples) {
    EXPECT_EQ(IntPolynomial({-1, 1}) * IntPolynomial({1, 1}), IntPolynomial({-1, 0, 1}));
    EXPECT_TRUE((IntPolynomial{} * IntPolynomial({3, 4})).is_zero());
    EXPECT_EQ(IntPolynomial({1, 1, 1}) * IntPolynomial({-1, 1}), IntPolynomial::binomial(3));
}

TEST(PolyExactDiv, Examples) {
    EXPECT_EQ(poly_exact_div(IntPolynomial::binomial(3), IntPolynomial({-1, 1})), IntPolynomial({1, 1, 1}));
    expect_code([] { poly_exact_div(IntPolynomial({-1, 0, 1}), IntPolynomial({2, 1})); }, Errc::NotDivisible);
    expect_code([] { poly_exact_div(IntPolynomial({1, 1}), IntPolynomial{}); }, Errc::DivByZero);
    const IntPolynomial f({3, -1, 4, 1, -5});
    EXPECT_EQ(poly_exact_div(f, IntPolynomial({1})), f);
}

TEST(PolyExactDiv, NonMonicDivisor) {
    const IntPolynomial g({3, 2});
    const IntPolynomial h({1, -4, 7});
    EXPECT_EQ(poly_exact_div(g * h, g), h);
    expect_code([&] { poly_exact_div(g * h + IntPolynomial({1}), g); }, Errc::NotDivisible);
}

TEST(PolyExactDiv, InvertsMultiplication) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, static_cast<int>(rng() % 7), 9, false);
        const IntPolynomial g = oracle::random_poly(rng, static_cast<int>(rng() % 5), 9, false);
        EXPECT_EQ(poly_exact_div(f * g, g), f);
    }
}

TEST(Cyclotomic, Examples) {
    EXPECT_EQ(cyclotomic(1), IntPolynomial({-1, 1}));
    EXPECT_EQ(cyclotomic(6), IntPolynomial({1, -1, 1}));
    EXPECT_EQ(cyclotomic(8), IntPolynomial({1, 0, 0, 0, 1}));
    // First cyclotomic polynomial with a coefficient of absolute value 2.
    EXPECT_EQ(cyclotomic(105).coeff(7), -2);
    expect_code([] { cyclotomic(0); }, Errc::InvalidArgument);
}

TEST(Cyclotomic, MatchesRootProduct) {
    for (std::int64_t r = 1; r <= 60; ++r) {
        EXPECT_EQ(cyclotomic(r), oracle::cyclotomic_from_roots(r)) << r;
    }
}

TEST(Cyclotomic, ProductOverDivisorsIsBinomial) {
    for (std::int64_t r = 1; r <= 200; ++r) {
        IntPolynomial prod({1});
        for (const auto d : oracle::divisors_scan(r)) {
            const IntPolynomial phi = cyclotomic(d);
            EXPECT_EQ(phi.degree(), oracle::totient_count(d));
            EXPECT_EQ(phi.leading(), 1);
            prod = prod * phi;
        }
        EXPECT_EQ(prod, IntPolynomial::binomial(r)) << r;
    }
}

TEST(Evaluation, Examples) {
    const IntPolynomial trefoil({1, -1, 1});
    EXPECT_NEAR(std::abs(poly_eval_complex(trefoil, 1.0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(poly_eval_complex(IntPolynomial({-1, 1}), 1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(poly_eval_complex(trefoil, -1.0) - 3.0), 0.0, 1e-15);
    EXPECT_EQ(poly_eval_int(trefoil, -1), 3);
    EXPECT_EQ(poly_eval_int(IntPolynomial{}, 12345), 0);
    // t^6 - t^5 + t^3 - t + 1 at t = 1
    EXPECT_EQ(poly_eval_int(IntPolynomial({1, -1, 0, 1, 0, -1, 1}), 1), 1);
}

TEST(Transforms, TaylorShiftDerivativeCompose) {
    EXPECT_EQ(taylor_shift_one(IntPolynomial({1, -1, 1})), IntPolynomial({1, 1, 1}));
    EXPECT_EQ(taylor_shift_one(IntPolynomial::binomial(4)), IntPolynomial({0, 4, 6, 4, 1}));
    EXPECT_EQ(derivative(IntPolynomial({5, 3, 0, 2})), IntPolynomial({3, 0, 6}));
    EXPECT_EQ(compose_power(IntPolynomial({-1, 1}), 3), IntPolynomial::binomial(3));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, static_cast<int>(rng() % 8), 20, false);
        for (long x : {-3L, 0L, 2L, 5L}) {
            EXPECT_EQ(poly_eval_int(taylor_shift_one(f), x), poly_eval_int(f, x + 1));
        }
    }
}

TEST(Transforms, LaurentNormalize) {
    EXPECT_EQ(laurent_normalize(IntPolynomial({0, 0, 1, -1})), IntPolynomial({-1, 1}));
    EXPECT_EQ(laurent_normalize(IntPolynomial({0, 2, -3})), IntPolynomial({-2, 3}));
    EXPECT_TRUE(laurent_normalize(IntPolynomial{}).is_zero());
}

TEST(RootMultiplicityMod, SyntheticDivision) {
    // t^2 - t + 1 = (t + 1)^2 mod 3
    EXPECT_EQ(root_multiplicity_mod(IntPolynomial({1, -1, 1}), -1, 3), 2);
    EXPECT_EQ(root_multiplicity_mod(IntPolynomial({1, -1, 1}), -1, 5), 0);
    EXPECT_EQ(root_multiplicity_mod(IntPolynomial({-1, 0, 0, 0, 1}), 1, 2), 4);
    expect_code([] { root_multiplicity_mod(IntPolynomial({1, 1}), 0, 6); }, Errc::InvalidArgument);
}

TEST(Gcd, SquarefreeDecomposition) {
    const IntPolynomial a({-1, 1});
    const IntPolynomial b({1, 1, 1});
    const IntPolynomial c({1, 0, 1});
    EXPECT_EQ(poly_gcd(a * b, b * c), b);
    const IntPolynomial f = IntPolynomial({3}) * a * b * b * c * c * c;
    const auto parts = squarefree_decomposition(f);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0], a);
    EXPECT_EQ(parts[1], b);
    EXPECT_EQ(parts[2], c);
    EXPECT_EQ(content(f), 3);
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(IntPolynomial({-1, 0, 1}), IntPolynomial({1, -1, 1})), 3);
    EXPECT_EQ(resultant(IntPolynomial({-1, 1}), IntPolynomial({-1, 1})), 0);
    EXPECT_EQ(resultant(IntPolynomial({-5, 1}), IntPolynomial({-2, 1})), 3);
    expect_code([] { resultant(IntPolynomial{}, IntPolynomial({1, 1})); }, Errc::ZeroInput);
}

TEST(Resultant, ConstantArguments) {
    EXPECT_EQ(resultant(IntPolynomial({5}), IntPolynomial({1, 2, 3})), 25);
    EXPECT_EQ(resultant(IntPolynomial({1, 2, 3}), IntPolynomial({5})), 25);
    EXPECT_EQ(resultant(IntPolynomial({4}), IntPolynomial({7})), 1);
}

TEST(Resultant, BareissMatchesRationalElimination) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 150; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 6, false);
        const IntPolynomial g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 6, false);
        const Integer expected = oracle::sylvester_rational(f, g);
        EXPECT_EQ(resultant_sylvester(f, g), expected);
        EXPECT_EQ(resultant(f, g), expected);
    }
}

TEST(Resultant, FastPathOnLargeBinomials) {
    const IntPolynomial trefoil({1, -1, 1});
    for (std::int64_t m = 1; m <= 40; ++m) {
        const IntPolynomial b = IntPolynomial::binomial(m);
        EXPECT_EQ(resultant(b, trefoil), resultant_sylvester(b, trefoil)) << m;
        EXPECT_EQ(resultant(trefoil, b), resultant_sylvester(trefoil, b)) << m;
    }
}

TEST(Resultant, AntisymmetryAndMultiplicativity) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 5, true);
        const IntPolynomial g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 5, true);
        const IntPolynomial h = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 5, true);
        const int sign = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(resultant(f, g), sign * resultant(g, f));
        EXPECT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
    }
}

TEST(Bareiss, SmallMatrices) {
    EXPECT_EQ(bareiss_determinant({}), 1);
    EXPECT_EQ(bareiss_determinant({{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}), -1);
    EXPECT_EQ(bareiss_determinant({{Integer(2), Integer(4)}, {Integer(1), Integer(2)}}), 0);
}
