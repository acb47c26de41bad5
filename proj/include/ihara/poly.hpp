#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ihara/bigint.hpp"
#include "ihara/matrix.hpp"

namespace ihara {

/// Dense univariate polynomial in u with arbitrary-precision integer
/// coefficients; coeffs()[k] is the coefficient of u^k. Always normalized:
/// the last stored coefficient is nonzero, and the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(const BigInt& c);
    /// c * u^k
    static IntPoly monomial(const BigInt& c, int k);

    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return int(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of u^k, zero when k is out of range.
    [[nodiscard]] BigInt coeff(int k) const;
    [[nodiscard]] BigInt leading_coeff() const;

    /// Smallest k >= from with a nonzero coefficient, or -1.
    [[nodiscard]] int first_nonzero_from(int from) const;
    /// True iff every odd-degree coefficient is zero.
    [[nodiscard]] bool is_even() const;

    [[nodiscard]] BigInt eval(const BigInt& x) const;
    [[nodiscard]] Rational eval(const Rational& x) const;

    [[nodiscard]] IntPoly derivative(int order = 1) const;
    [[nodiscard]] IntPoly pow(unsigned exponent) const;

    /// Exact division in Z[u]; throws ConsistencyError if the remainder is
    /// nonzero or a quotient coefficient is not integral.
    [[nodiscard]] IntPoly divide_exact(const IntPoly& divisor) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& b) { return a *= b; }
    friend IntPoly operator*(const BigInt& b, IntPoly a) { return a *= b; }
    IntPoly operator-() const;

    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Descending powers, e.g. "-3u^4 + 4u^3 + 2u^2 - 4u + 1"; "0" for zero.
    [[nodiscard]] std::string to_string() const;
    /// {"coeffs":["c0","c1",...]} with decimal strings, no whitespace.
    [[nodiscard]] std::string to_json() const;
    static IntPoly from_json(const std::string& json);
    /// Parses the output of to_string().
    static IntPoly parse(const std::string& text);

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// The polynomial u.
inline IntPoly poly_u() { return IntPoly{0, 1}; }

using PolyMatrix = SquareMatrix<IntPoly>;
using BigIntMatrix = SquareMatrix<BigInt>;

/// Exact integer determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(BigIntMatrix m);

enum class DetStrategy {
    /// Evaluate at 0, 1, -1, 2, -2, ..., integer determinants, exact interpolation.
    EvaluationInterpolation,
    /// Bareiss elimination directly over Z[u].
    FractionFree,
};

/// Exact determinant of a polynomial matrix whose determinant has degree at
/// most `degree_bound`.
IntPoly det_poly_matrix(const PolyMatrix& m, int degree_bound,
                        DetStrategy strategy = DetStrategy::EvaluationInterpolation);

/// Interpolation points used by the default strategy: 0, 1, -1, 2, -2, ...
std::vector<BigInt> interpolation_points(int count);

/// Unique polynomial of degree < points.size() through (points[i], values[i]),
/// required to have integer coefficients (ConsistencyError otherwise).
IntPoly interpolate_integer(const std::vector<BigInt>& points, const std::vector<BigInt>& values);

} // namespace ihara
