#pragma once

// Torus-link structure: parameters, Alexander polynomials and their cyclotomic
// factorization, determinants, colorings and Hosokawa polynomials.

#include "torus/arith.hpp"
#include "torus/polyring.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace torus {

/// (p, q) with the derived quantities of the family. Sizes are 64-bit because
/// polynomial degrees and loop bounds are taken from them; values computed from
/// them are big integers.
struct TorusParams {
    std::int64_t p = 1;
    std::int64_t q = 1;
    std::int64_t d = 1;       // gcd(p, q), the number of components
    std::int64_t p_prime = 1; // p / d
    std::int64_t q_prime = 1; // q / d
    std::int64_t L = 1;       // lcm(p, q) = d p' q'

    bool is_knot() const noexcept { return d == 1; }

    friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

TorusParams torus_params(std::int64_t p, std::int64_t q);

/// Exponents M_r of Phi_r in Delta_{p,q}; only r with M_r > 0 are stored.
struct CycFactorization {
    TorusParams params;
    std::map<std::int64_t, std::int64_t> entries;
};

/// Integer vector with gcd 1 and no zero entry; alpha is the sum of its entries.
struct AdmissibleVector {
    std::vector<std::int64_t> z;
    std::int64_t alpha = 0;

    /// Throws NON_ADMISSIBLE for an empty vector, a zero entry or gcd != 1.
    static AdmissibleVector make(std::vector<std::int64_t> z);
};

/// (t^L - 1)^d (t - 1) / ((t^p - 1)(t^q - 1)); the constant 1 when p = 1 or q = 1.
IntPolynomial alexander_poly(const TorusParams& params);

/// M_r = d [r | L] - [r | p] - [r | q] + [r = 1] for every r | L, zero entries dropped.
CycFactorization cyclotomic_multiplicities(const TorusParams& params);

/// prod_r Phi_r^{M_r}
IntPolynomial expand(const CycFactorization& factorization);

/// Single-variable specialization Delta^z(X). For knots z is ignored and Delta is returned.
/// Throws NON_ADMISSIBLE if z has the wrong length and ZERO_ALPHA if sum(z) = 0.
IntPolynomial specialize_z(const TorusParams& params, const AdmissibleVector& z);

/// g_{a p'q'}^d / (g_{a p'} g_{a q'}) with g_k = (X^k - 1)/(X - 1). Links only (KNOT_CASE otherwise).
IntPolynomial hosokawa(const TorusParams& params, const AdmissibleVector& z);

/// |Delta(-1)|
Integer determinant(const TorusParams& params);

/// Knot determinant by parity: the odd parameter when the other is even, 1 when both are odd.
Integer determinant_parity_formula(const TorusParams& params);

bool ell_colorable(const TorusParams& params, const Integer& ell);

/// Order of vanishing of Delta mod ell at t = -1; bounds the coloring rank from above.
std::int64_t coloring_zero_order(const TorusParams& params, const Integer& ell);

} // namespace torus
