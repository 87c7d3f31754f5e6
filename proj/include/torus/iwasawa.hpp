#pragma once

// l-adic completion X -> 1 + T of specialized Alexander polynomials, mu/lambda read
// off the exact coefficients, and nu fitted from tower valuations.

#include "torus/alexander.hpp"
#include "torus/covers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torus {

/// f(1 + T) with exact integer coefficients; index i multiplies T^i.
struct PadicPolynomial {
    Integer ell;
    std::vector<Integer> coeffs;
};

/// Throws ZERO_INPUT for f = 0 and INVALID_ARGUMENT for a non-prime ell.
/// Powers of X are stripped first (they are units in the completion).
PadicPolynomial complete_at_ell(const IntPolynomial& f, const Integer& ell);

/// mu = min v_l(c_i) over nonzero coefficients, lambda = least i attaining it.
std::pair<std::int64_t, std::int64_t> weierstrass_mu_lambda(const PadicPolynomial& g);

enum class NuKind { Absolute, Relative, NotApplicable };

std::string_view nu_kind_name(NuKind kind);

struct IwasawaInvariants {
    std::int64_t mu = 0;
    std::int64_t lambda = 0;
    /// Empty when kind is NotApplicable.
    std::optional<std::int64_t> nu;
    NuKind nu_kind = NuKind::Absolute;
};

/// Returns (0, 0, 0) after checking it against the completed Delta and the tower
/// valuations for n = 0..n_max. LINK_CASE for links, INTERNAL if a check fails.
IwasawaInvariants knot_invariants(const TorusParams& params, const Integer& ell, std::int64_t n_max = 4);

struct LinkIwasawaReport {
    /// mu and lambda from the completed Delta_z; nu fitted from the relative tower.
    IwasawaInvariants invariants;
    /// (d - 2) l^{v_l(alpha)}
    std::int64_t lambda_closed_form = 0;
    bool closed_form_agrees = false;
    /// (d - 1) + d lambda(g_{a p'q'}) - lambda(g_{a p'}) - lambda(g_{a q'}), a = |alpha|.
    std::int64_t lambda_factor_ledger = 0;
    TowerReport tower;
    /// First n of the affine window; empty when nu is not available.
    std::optional<std::int64_t> fit_start;
    std::string note;
};

/// KNOT_CASE for knots, NON_ADMISSIBLE / ZERO_ALPHA from the specialization,
/// INTERNAL if mu != 0 or the valuations are not affine with slope lambda on the window.
LinkIwasawaReport link_invariants(const TorusParams& params, const AdmissibleVector& z, const Integer& ell,
                                  std::int64_t n_max = 5);

/// As link_invariants, then FORMULA_MISMATCH unless lambda equals (d - 2) l^{v_l(alpha)}.
LinkIwasawaReport require_closed_form(const TorusParams& params, const AdmissibleVector& z, const Integer& ell,
                                      std::int64_t n_max = 5);

/// True iff the factor ledger equals the lambda extracted from the completed Delta_z.
bool lambda_decomposition_check(const TorusParams& params, const AdmissibleVector& z, const Integer& ell);

/// lambda of g_k(1 + T), g_k = (X^k - 1)/(X - 1).
std::int64_t cyclotomic_quotient_lambda(std::int64_t k, const Integer& ell);

/// (d - 2) l^{v_l(alpha)}
std::int64_t lambda_closed_form(const TorusParams& params, const AdmissibleVector& z, const Integer& ell);

} // namespace torus
