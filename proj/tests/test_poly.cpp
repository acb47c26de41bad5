#include <doctest.h>

#include <random>

#include "ihara/errors.hpp"
#include "ihara/poly.hpp"
#include "support/oracles.hpp"

using namespace ihara;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree), c(-bound, bound);
    std::vector<BigInt> coeffs;
    for (int k = deg(rng); k >= 0; --k) coeffs.emplace_back(c(rng));
    return IntPoly(std::move(coeffs));
}

} // namespace

TEST_CASE("normalization and basic accessors") {
    IntPoly p{1, 0, 3, 0, 0};
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(7) == 0);
    CHECK(p.leading_coeff() == 3);
    CHECK(p.first_nonzero_from(1) == 2);
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{0, 0}.is_zero());
    CHECK(IntPoly{1, 0, -1}.is_even());
    CHECK_FALSE(IntPoly{1, 1}.is_even());
    CHECK(IntPoly::monomial(5, 3) == IntPoly{0, 0, 0, 5});
}

TEST_CASE("arithmetic") {
    const IntPoly a{1, -1};
    const IntPoly b{1, 1};
    CHECK(a * b == IntPoly{1, 0, -1});
    CHECK(a + b == IntPoly{2});
    CHECK(a - a == IntPoly{});
    CHECK(-a == IntPoly{-1, 1});
    CHECK(a.pow(3) == IntPoly{1, -3, 3, -1});
    CHECK(a.pow(0) == IntPoly{1});
    CHECK((IntPoly{1, 0, -1}).divide_exact(a) == b);
    CHECK_THROWS_AS(static_cast<void>(IntPoly{1, 0, 1}.divide_exact(a)), ConsistencyError);
    CHECK_THROWS_AS(static_cast<void>(IntPoly{1, 1}.divide_exact(IntPoly{0, 2})), ConsistencyError);
}

TEST_CASE("big coefficients stay exact") {
    IntPoly p = IntPoly{1, -2}.pow(80);
    CHECK(p.leading_coeff() == BigInt("1208925819614629174706176"));
    CHECK(p.eval(BigInt(1)) == 1);
    CHECK(p.eval(Rational(1, 2)) == 0);
}

TEST_CASE("printing") {
    CHECK(IntPoly{1, -4, 2, 4, -3}.to_string() == "-3u^4 + 4u^3 + 2u^2 - 4u + 1");
    CHECK(IntPoly{1, 0, 0, -2, 0, 0, 1}.to_string() == "u^6 - 2u^3 + 1");
    CHECK(IntPoly{0, -1}.to_string() == "-u");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{-7}.to_string() == "-7");
}

TEST_CASE("text and json round trips") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly p = random_poly(rng, 12, 50);
        CHECK(IntPoly::parse(p.to_string()) == p);
        CHECK(IntPoly::from_json(p.to_json()) == p);
        CHECK(IntPoly::from_json(p.to_json()).to_json() == p.to_json());
    }
    CHECK(IntPoly{3, 0, -1}.to_json() == R"({"coeffs":["3","0","-1"]})");
    CHECK_THROWS_AS(IntPoly::parse("u^^2"), InputError);
    CHECK_THROWS_AS(IntPoly::parse(""), InputError);
    CHECK_THROWS_AS(IntPoly::from_json(R"({"coeffs":["x"]})"), InputError);
}

TEST_CASE("derivatives match a binomial Taylor shift") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly p = random_poly(rng, 10, 20);
        for (int x = -2; x <= 2; ++x) {
            auto shifted = oracle::taylor_shift(p, BigInt(x));
            BigInt factorial = 1;
            for (int k = 0; k <= p.degree(); ++k) {
                if (k) factorial *= k;
                CHECK(p.derivative(k).eval(BigInt(x)) == factorial * shifted[k]);
            }
            CHECK(p.derivative(p.degree() + 1).is_zero());
        }
    }
}

TEST_CASE("integer determinant agrees with the permutation expansion") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int n = 0; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            BigIntMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = c(rng);
            if (trial % 5 == 0 && n > 1)
                for (int j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 2;  // singular
            CHECK(det_bareiss(m) == oracle::leibniz_det(m, BigInt(1)));
        }
    }
}

TEST_CASE("polynomial determinant: both strategies agree with the permutation expansion") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            PolyMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = random_poly(rng, 2, 3);
            const IntPoly expected = oracle::leibniz_det(m, IntPoly{1});
            CHECK(det_poly_matrix(m, 2 * n, DetStrategy::EvaluationInterpolation) == expected);
            CHECK(det_poly_matrix(m, 2 * n, DetStrategy::FractionFree) == expected);
            CHECK(det_poly_matrix(m.transposed(), 2 * n) == expected);
        }
    }
}

TEST_CASE("a violated degree bound is detected") {
    PolyMatrix m(2);
    m(0, 0) = IntPoly{0, 0, 1};
    m(1, 1) = IntPoly{1, 1};
    m(0, 1) = IntPoly{};
    m(1, 0) = IntPoly{};
    CHECK(det_poly_matrix(m, 3) == IntPoly{0, 0, 1, 1});
    CHECK_THROWS_AS(det_poly_matrix(m, 2), ConsistencyError);
    CHECK_THROWS_AS(det_poly_matrix(m, 2, DetStrategy::FractionFree), ConsistencyError);
}

TEST_CASE("interpolation") {
    const auto pts = interpolation_points(5);
    CHECK(pts == std::vector<BigInt>{0, 1, -1, 2, -2});
    const IntPoly p{4, -1, 0, 2, 1};
    std::vector<BigInt> vals;
    for (const auto& x : pts) vals.push_back(p.eval(x));
    CHECK(interpolate_integer(pts, vals) == p);
    // u (u - 1) / 2 has non-integral coefficients
    CHECK_THROWS_AS(interpolate_integer({0, 1, -1}, {0, 0, 1}), ConsistencyError);
}

TEST_CASE("evaluation examples") {
    CHECK(IntPoly{1, 0, 0, -2, 0, 0, 1}.eval(BigInt(1)) == 0);
    CHECK(IntPoly{1, -4, 2, 4, -3}.eval(BigInt(0)) == 1);
    CHECK(IntPoly{1, 0, -1}.eval(BigInt(3)) == -8);
    CHECK(IntPoly{1, 0, -1}.eval(Rational(1, 3)) == Rational(8, 9));
}

TEST_CASE("derivative examples and central differences") {
    CHECK(IntPoly{1, 0, -6, 0, 9, 0, -4}.derivative(2) == IntPoly{-12, 0, 108, 0, -120});
    CHECK(IntPoly{7}.derivative(1).is_zero());
    CHECK(IntPoly::monomial(1, 3).derivative(3) == IntPoly{6});
    CHECK(IntPoly{1, 2}.derivative(0) == IntPoly{1, 2});
    // (p(x+1) - p(x-1)) / 2 is exact for degree <= 2
    std::mt19937 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const IntPoly p = random_poly(rng, 2, 30);
        for (int x = -3; x <= 3; ++x) {
            Rational diff(p.eval(BigInt(x + 1)) - p.eval(BigInt(x - 1)), 2);
            diff.canonicalize();
            CHECK(Rational(p.derivative().eval(BigInt(x))) == diff);
        }
    }
}

TEST_CASE("small determinant examples") {
    PolyMatrix one(1);
    one(0, 0) = IntPoly{3, 0, 5};
    CHECK(det_poly_matrix(one, 2) == IntPoly{3, 0, 5});
    PolyMatrix two(2);
    two(0, 0) = IntPoly{1};
    two(0, 1) = IntPoly{0, 1};
    two(1, 0) = IntPoly{0, 1};
    two(1, 1) = IntPoly{1};
    CHECK(det_poly_matrix(two, 2) == IntPoly{1, 0, -1});
    for (int n = 0; n <= 4; ++n) {
        BigIntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = (i * 7 + j * 3) % 5 - 2;
        PolyMatrix p(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) = IntPoly::constant(m(i, j));
        CHECK(det_poly_matrix(p, 0) == IntPoly::constant(det_bareiss(m)));
    }
}
