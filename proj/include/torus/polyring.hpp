#pragma once

// Dense univariate polynomials over Z with exact big-integer coefficients.

#include "torus/arith.hpp"

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace torus {

/// Coefficient i multiplies t^i. The top stored coefficient is nonzero;
/// the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// c * t^k
    static IntPolynomial monomial(std::int64_t k, const Integer& c = 1);
    /// t^k - 1
    static IntPolynomial binomial(std::int64_t k);
    /// 1 + t + ... + t^(k-1)
    static IntPolynomial geometric(std::int64_t k);

    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    /// Zero beyond the stored range.
    Integer coeff(std::int64_t i) const;
    const Integer& leading() const;
    /// Lowest index with a nonzero coefficient (the power of t dividing f).
    std::int64_t low_degree() const;

    std::string to_string(char var = 't') const;

    IntPolynomial& operator+=(const IntPolynomial& g);
    IntPolynomial& operator-=(const IntPolynomial& g);
    IntPolynomial& operator*=(const Integer& c);

    friend IntPolynomial operator+(IntPolynomial f, const IntPolynomial& g) { return f += g; }
    friend IntPolynomial operator-(IntPolynomial f, const IntPolynomial& g) { return f -= g; }
    friend IntPolynomial operator*(IntPolynomial f, const Integer& c) { return f *= c; }
    friend IntPolynomial operator-(IntPolynomial f) { return f *= Integer(-1); }
    friend bool operator==(const IntPolynomial& f, const IntPolynomial& g) { return f.coeffs_ == g.coeffs_; }

  private:
    void trim();

    std::vector<Integer> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial poly_pow(const IntPolynomial& f, std::int64_t e);

/// h with f = g * h. Throws NOT_DIVISIBLE on a nonzero remainder, DIV_BY_ZERO for g = 0.
IntPolynomial poly_exact_div(const IntPolynomial& f, const IntPolynomial& g);

struct DivRem {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division by a divisor whose leading coefficient is +-1; stays in Z[t].
DivRem poly_divrem_unit(const IntPolynomial& f, const IntPolynomial& g);

/// r-th cyclotomic polynomial, by dividing t^r - 1 by Phi_d for every proper divisor d.
IntPolynomial cyclotomic(std::int64_t r);

std::complex<double> poly_eval_complex(const IntPolynomial& f, std::complex<double> z);
Integer poly_eval_int(const IntPolynomial& f, const Integer& x);

IntPolynomial derivative(const IntPolynomial& f);
/// f(1 + t), expanded.
IntPolynomial taylor_shift_one(const IntPolynomial& f);
/// f(t) -> f(t^k)
IntPolynomial compose_power(const IntPolynomial& f, std::int64_t k);
/// Canonical representative modulo units +-t^a: nonzero constant term, positive leading coefficient.
IntPolynomial laurent_normalize(const IntPolynomial& f);
/// Multiplicity of the factor (t - a) in f reduced modulo the prime ell.
std::int64_t root_multiplicity_mod(const IntPolynomial& f, const Integer& a, const Integer& ell);

/// gcd of the coefficients, sign taken from the leading coefficient.
Integer content(const IntPolynomial& f);
IntPolynomial primitive_part(const IntPolynomial& f);
/// Primitive gcd over Z[t] with positive leading coefficient.
IntPolynomial poly_gcd(IntPolynomial f, IntPolynomial g);

/// Square-free parts (f_1, f_2, ...) with f = c * prod f_i^i. Empty entries are the constant 1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f);

/// Res(f, g). Reduces a large-degree argument modulo a unit-leading one first, then runs
/// fraction-free elimination on the Sylvester matrix. Throws ZERO_INPUT for a zero argument.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Res(f, g) from a Bareiss determinant of the full (m+n) x (m+n) Sylvester matrix.
Integer resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g);

/// Fraction-free Gaussian elimination with row pivoting. The matrix is consumed.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

} // namespace torus
