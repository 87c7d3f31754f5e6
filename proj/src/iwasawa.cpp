#include "torus/iwasawa.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <string>

namespace torus {

namespace {

void require_prime(const Integer& ell) {
    if (!is_prime(ell)) {
        throw Error(Errc::InvalidArgument, "expected a prime, got " + ell.get_str());
    }
}

std::int64_t ell_power(const Integer& ell, std::int64_t e) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(e));
    return to_int64(v);
}

std::int64_t valuation(const Integer& ell, std::int64_t n) {
    return static_cast<std::int64_t>(padic_valuation(ell, Integer(static_cast<long>(n < 0 ? -n : n))));
}

// Least j >= 1 with phi(l^j) > lambda. From that level on each primitive l^j-th root
// zeta has v(zeta - 1) below every root valuation of the distinguished factor, so the
// level contributes exactly lambda to the valuation of the tower order.
std::int64_t stable_level(const Integer& ell, std::int64_t lambda) {
    const std::int64_t l = to_int64(ell);
    std::int64_t j = 1;
    Integer phi = l - 1;
    while (phi <= lambda) {
        phi *= l;
        ++j;
    }
    return j;
}

} // namespace

std::string_view nu_kind_name(NuKind kind) {
    switch (kind) {
    case NuKind::Absolute: return "absolute";
    case NuKind::Relative: return "relative";
    case NuKind::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

PadicPolynomial complete_at_ell(const IntPolynomial& f, const Integer& ell) {
    if (f.is_zero()) {
        throw Error(Errc::ZeroInput, "completion of the zero polynomial");
    }
    require_prime(ell);
    const IntPolynomial g = taylor_shift_one(laurent_normalize(f));
    return {ell, g.coeffs()};
}

std::pair<std::int64_t, std::int64_t> weierstrass_mu_lambda(const PadicPolynomial& g) {
    std::optional<unsigned long> mu;
    std::int64_t lambda = 0;
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        if (sgn(g.coeffs[i]) == 0) {
            continue;
        }
        const unsigned long v = padic_valuation(g.ell, g.coeffs[i]);
        if (!mu || v < *mu) {
            mu = v;
            lambda = static_cast<std::int64_t>(i);
        }
    }
    if (!mu) {
        throw Error(Errc::ZeroInput, "mu and lambda of the zero series");
    }
    return {static_cast<std::int64_t>(*mu), lambda};
}

IwasawaInvariants knot_invariants(const TorusParams& params, const Integer& ell, std::int64_t n_max) {
    if (!params.is_knot()) {
        throw Error(Errc::LinkCase, "knot invariants need gcd(p, q) = 1; pass an admissible vector");
    }
    const auto [mu, lambda] = weierstrass_mu_lambda(complete_at_ell(alexander_poly(params), ell));
    if (mu != 0 || lambda != 0) {
        throw Error(Errc::Internal, "completed Alexander polynomial of a knot is not a unit: mu = " +
                                        std::to_string(mu) + ", lambda = " + std::to_string(lambda));
    }
    const TowerReport tower = tower_orders_knot(params, ell, n_max);
    for (std::size_t n = 0; n < tower.valuations.size(); ++n) {
        if (!tower.valuations[n] || *tower.valuations[n] != 0) {
            throw Error(Errc::Internal, "knot tower order " + tower.orders[n].get_str() + " at n = " +
                                            std::to_string(n) + " is divisible by " + ell.get_str());
        }
    }
    return {0, 0, 0, NuKind::Absolute};
}

std::int64_t cyclotomic_quotient_lambda(std::int64_t k, const Integer& ell) {
    if (k < 1) {
        throw Error(Errc::InvalidArgument, "g_k needs k >= 1");
    }
    return weierstrass_mu_lambda(complete_at_ell(IntPolynomial::geometric(k), ell)).second;
}

namespace {

// Delta_z = (X - 1)^(d-1) g_{a p'q'}^d / (g_{a p'} g_{a q'}) and lambda is additive.
std::int64_t factor_ledger(const TorusParams& params, const AdmissibleVector& z, const Integer& ell) {
    const std::int64_t a = z.alpha < 0 ? -z.alpha : z.alpha;
    return (params.d - 1) + params.d * cyclotomic_quotient_lambda(a * params.p_prime * params.q_prime, ell) -
           cyclotomic_quotient_lambda(a * params.p_prime, ell) - cyclotomic_quotient_lambda(a * params.q_prime, ell);
}

} // namespace

std::int64_t lambda_closed_form(const TorusParams& params, const AdmissibleVector& z, const Integer& ell) {
    require_prime(ell);
    if (z.alpha == 0) {
        throw Error(Errc::ZeroAlpha, "sum of the admissible vector is 0");
    }
    return (params.d - 2) * ell_power(ell, valuation(ell, z.alpha));
}

LinkIwasawaReport link_invariants(const TorusParams& params, const AdmissibleVector& z, const Integer& ell,
                                  std::int64_t n_max) {
    if (params.is_knot()) {
        throw Error(Errc::KnotCase, "link invariants need d >= 2; use the knot invariants");
    }
    require_prime(ell);
    LinkIwasawaReport report;
    const IntPolynomial delta = specialize_z(params, z);
    const auto [mu, lambda] = weierstrass_mu_lambda(complete_at_ell(delta, ell));
    if (mu != 0) {
        throw Error(Errc::Internal, "monic Delta_z completed with mu = " + std::to_string(mu));
    }
    report.invariants.mu = mu;
    report.invariants.lambda = lambda;
    report.lambda_closed_form = lambda_closed_form(params, z, ell);
    report.closed_form_agrees = lambda == report.lambda_closed_form;
    report.lambda_factor_ledger = factor_ledger(params, z, ell);

    report.tower = tower_orders_link(params, z, ell, n_max);
    const TowerReport& tower = report.tower;
    const bool infinite = std::any_of(tower.valuations.begin(), tower.valuations.end(),
                                      [](const auto& v) { return !v.has_value(); });
    const std::int64_t start = std::max(tower.v + 1, stable_level(ell, lambda));
    if (infinite) {
        report.invariants.nu_kind = NuKind::NotApplicable;
        report.note = "a cover in the tower has infinite first homology; nu is not defined";
        return report;
    }
    if (n_max - start + 1 < 3) {
        report.invariants.nu_kind = NuKind::NotApplicable;
        report.note = "the stable window starts at n = " + std::to_string(start) + "; raise n to at least " +
                      std::to_string(start + 2) + " to fit nu";
        return report;
    }
    // v_l(order_n) = n lambda + nu on the window (mu = 0).
    std::optional<std::int64_t> nu;
    for (std::int64_t n = start; n <= n_max; ++n) {
        const auto value = static_cast<std::int64_t>(*tower.valuations[static_cast<std::size_t>(n - tower.first_n)]);
        const std::int64_t c = value - n * lambda;
        if (nu && *nu != c) {
            throw Error(Errc::Internal, "tower valuations are not affine with slope " + std::to_string(lambda) +
                                            " at n = " + std::to_string(n));
        }
        nu = c;
    }
    report.invariants.nu = nu;
    report.invariants.nu_kind = NuKind::Relative;
    report.fit_start = start;
    report.note = "nu is relative to the l^v-fold cover, v = " + std::to_string(tower.v);
    return report;
}

LinkIwasawaReport require_closed_form(const TorusParams& params, const AdmissibleVector& z, const Integer& ell,
                                      std::int64_t n_max) {
    LinkIwasawaReport report = link_invariants(params, z, ell, n_max);
    if (!report.closed_form_agrees) {
        throw Error(Errc::FormulaMismatch, "extracted lambda = " + std::to_string(report.invariants.lambda) +
                                               " but (d - 2) l^{v_l(alpha)} = " +
                                               std::to_string(report.lambda_closed_form));
    }
    return report;
}

bool lambda_decomposition_check(const TorusParams& params, const AdmissibleVector& z, const Integer& ell) {
    if (params.is_knot()) {
        throw Error(Errc::KnotCase, "the factor ledger applies to links (d >= 2)");
    }
    const IntPolynomial delta = specialize_z(params, z);
    const std::int64_t lambda = weierstrass_mu_lambda(complete_at_ell(delta, ell)).second;
    return factor_ledger(params, z, ell) == lambda;
}

} // namespace torus
