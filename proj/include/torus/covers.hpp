#pragma once

// Homology orders of cyclic branched covers via resultants, l-power towers, and
// Mahler measures (root-based and by quadrature on the unit circle).

#include "torus/alexander.hpp"
#include "torus/arith.hpp"
#include "torus/polyring.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace torus {

/// Orders along the tower of l^n-fold covers, n = first_n .. first_n + orders.size() - 1.
///
/// For knots the orders are absolute |H_1| and `closed_form` holds the prediction
/// b^(l^min(n, r) - 1). For links they are relative to the base cover at n = v:
/// orders[n] = |H_1(M_{z,l^n})| / |H_1(M_{z,l^v})|, and `closed_form` is empty.
/// An order of 0 stands for infinite homology.
struct TowerReport {
    TorusParams params;
    std::optional<AdmissibleVector> z;
    Integer ell;
    std::int64_t v = 0;
    std::int64_t first_n = 0;
    bool relative = false;
    std::vector<Integer> orders;
    /// v_l(orders[i]); empty where the order is 0.
    std::vector<std::optional<unsigned long>> valuations;
    std::vector<Integer> closed_form;
};

/// |Res(t^m - 1, Delta)|; 0 encodes infinite H_1. Knots only.
Integer homology_order_cyclic(const TorusParams& params, std::int64_t m);

/// b^(l^min(n, r) - 1) with r = v_l(pq), b = q if l | p, b = p if l | q, and 1 if l does not divide pq.
Integer knot_tower_closed_form(const TorusParams& params, const Integer& ell, std::int64_t n);

/// Tower for n = 0..n_max; throws INTERNAL if a resultant disagrees with the closed form.
TowerReport tower_orders_knot(const TorusParams& params, const Integer& ell, std::int64_t n_max);

/// Relative orders |Res((t^(l^n) - 1)/(t^(l^v) - 1), Delta_z)| for n = v..n_max,
/// v = max_i v_l(z_i). Links only.
TowerReport tower_orders_link(const TorusParams& params, const AdmissibleVector& z, const Integer& ell,
                              std::int64_t n_max);

/// All complex roots of a square-free polynomial (Aberth iteration + Newton polish).
std::vector<std::complex<double>> complex_roots(const IntPolynomial& f);

/// |lead| * prod max(1, |root|), from the roots of each square-free factor.
double mahler_measure_roots(const IntPolynomial& f);

/// Midpoint rule for the integral over [0, 1] of log|f(exp(2 pi i theta))|, sampling
/// theta = (j + 1/2)/grid. Throws NON_FINITE if a sample has |f| < 1e-14.
double mahler_measure_quadrature(const IntPolynomial& f, std::int64_t grid, unsigned jobs = 1);

/// sup |h_n^(1/n) - 1| over the tail n_max/2 <= n <= n_max with h_n != 0.
double acuna_short_check(const TorusParams& params, std::int64_t n_max);

} // namespace torus
