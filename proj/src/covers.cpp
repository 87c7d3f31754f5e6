#include "torus/covers.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace torus {

namespace {

constexpr std::int64_t kMaxCoverDegree = std::int64_t{1} << 22;

void require_knot(const TorusParams& params) {
    if (!params.is_knot()) {
        throw Error(Errc::LinkCase, "cyclic covers of a link need an admissible vector; use the link tower");
    }
}

std::int64_t checked_power(const Integer& ell, std::int64_t n) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(n));
    if (v > kMaxCoverDegree) {
        throw Error(Errc::InvalidArgument, "cover degree " + ell.get_str() + "^" + std::to_string(n) + " is too large");
    }
    return v.get_si();
}

void require_prime(const Integer& ell) {
    if (!is_prime(ell)) {
        throw Error(Errc::InvalidArgument, "expected a prime, got " + ell.get_str());
    }
}

void fill_valuations(TowerReport& report) {
    report.valuations.clear();
    for (const auto& order : report.orders) {
        if (sgn(order) == 0) {
            report.valuations.emplace_back();
        } else {
            report.valuations.emplace_back(padic_valuation(report.ell, order));
        }
    }
}

} // namespace

Integer homology_order_cyclic(const TorusParams& params, std::int64_t m) {
    require_knot(params);
    if (m < 1) {
        throw Error(Errc::InvalidArgument, "cover degree must be >= 1");
    }
    if (m > kMaxCoverDegree) {
        throw Error(Errc::InvalidArgument, "cover degree " + std::to_string(m) + " is too large");
    }
    return abs(resultant(IntPolynomial::binomial(m), alexander_poly(params)));
}

Integer knot_tower_closed_form(const TorusParams& params, const Integer& ell, std::int64_t n) {
    require_knot(params);
    require_prime(ell);
    const Integer pq = Integer(params.p) * params.q;
    const bool divides_p = mpz_divisible_p(Integer(params.p).get_mpz_t(), ell.get_mpz_t()) != 0;
    const bool divides_q = mpz_divisible_p(Integer(params.q).get_mpz_t(), ell.get_mpz_t()) != 0;
    if (!divides_p && !divides_q) {
        return 1;
    }
    const auto r = static_cast<std::int64_t>(padic_valuation(ell, pq));
    const Integer base = divides_p ? Integer(params.q) : Integer(params.p);
    Integer exponent;
    mpz_pow_ui(exponent.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(std::min(n, r)));
    exponent -= 1;
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return out;
}

TowerReport tower_orders_knot(const TorusParams& params, const Integer& ell, std::int64_t n_max) {
    require_knot(params);
    require_prime(ell);
    if (n_max < 0) {
        throw Error(Errc::InvalidArgument, "n_max must be >= 0");
    }
    TowerReport report;
    report.params = params;
    report.ell = ell;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const Integer order = homology_order_cyclic(params, checked_power(ell, n));
        const Integer predicted = knot_tower_closed_form(params, ell, n);
        if (order != predicted) {
            throw Error(Errc::Internal, "tower order " + order.get_str() + " at n = " + std::to_string(n) +
                                            " differs from the closed form " + predicted.get_str());
        }
        report.orders.push_back(order);
        report.closed_form.push_back(predicted);
    }
    fill_valuations(report);
    return report;
}

TowerReport tower_orders_link(const TorusParams& params, const AdmissibleVector& z, const Integer& ell,
                              std::int64_t n_max) {
    if (params.is_knot()) {
        throw Error(Errc::KnotCase, "the link tower needs d >= 2; use the knot tower");
    }
    require_prime(ell);
    const IntPolynomial delta = specialize_z(params, z);
    TowerReport report;
    report.params = params;
    report.z = z;
    report.ell = ell;
    report.relative = true;
    for (std::int64_t zi : z.z) {
        report.v = std::max(report.v, static_cast<std::int64_t>(padic_valuation(ell, Integer(static_cast<long>(zi)))));
    }
    report.first_n = report.v;
    const std::int64_t base = checked_power(ell, report.v);
    for (std::int64_t n = report.v; n <= n_max; ++n) {
        if (n == report.v) {
            report.orders.emplace_back(1);
            continue;
        }
        // (t^(l^n) - 1)/(t^(l^v) - 1) = sum_j t^(j l^v)
        const std::int64_t top = checked_power(ell, n);
        std::vector<Integer> c(static_cast<std::size_t>(top - base) + 1);
        for (std::int64_t e = 0; e <= top - base; e += base) {
            c[static_cast<std::size_t>(e)] = 1;
        }
        report.orders.push_back(abs(resultant(IntPolynomial(std::move(c)), delta)));
    }
    fill_valuations(report);
    return report;
}

std::vector<std::complex<double>> complex_roots(const IntPolynomial& f) {
    using C = std::complex<double>;
    if (f.is_zero()) {
        throw Error(Errc::ZeroInput, "roots of the zero polynomial");
    }
    const std::int64_t n = f.degree();
    if (n < 1) {
        return {};
    }
    std::vector<double> a;
    a.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        a.push_back(c.get_d());
    }
    const auto eval = [&](C z, C& value, C& deriv) {
        value = 0.0;
        deriv = 0.0;
        for (auto i = static_cast<std::size_t>(n) + 1; i-- > 0;) {
            deriv = deriv * z + value;
            value = value * z + a[i];
        }
    };

    // Initial guesses on a circle with the geometric-mean root modulus.
    double radius = std::pow(std::abs(a.front() / a.back()), 1.0 / static_cast<double>(n));
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        radius = 1.0;
    }
    std::vector<C> z(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < z.size(); ++k) {
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
    }

    for (int iter = 0; iter < 1000; ++iter) {
        double max_step = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            C value, deriv;
            eval(z[k], value, deriv);
            if (value == C(0.0)) {
                continue;
            }
            const C ratio = value / deriv;
            C repulsion = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != k) {
                    repulsion += 1.0 / (z[k] - z[j]);
                }
            }
            const C step = ratio / (1.0 - ratio * repulsion);
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (max_step < 1e-15) {
            break;
        }
    }
    for (auto& root : z) {
        for (int polish = 0; polish < 3; ++polish) {
            C value, deriv;
            eval(root, value, deriv);
            if (deriv == C(0.0)) {
                break;
            }
            root -= value / deriv;
        }
    }
    return z;
}

double mahler_measure_roots(const IntPolynomial& f) {
    if (f.is_zero()) {
        throw Error(Errc::ZeroInput, "Mahler measure of the zero polynomial");
    }
    // Roots at 0 contribute max(1, 0) = 1.
    const IntPolynomial g = laurent_normalize(f);
    double measure = std::abs(content(g).get_d());
    const auto parts = squarefree_decomposition(g);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        double part = std::abs(parts[i].leading().get_d());
        for (const auto& root : complex_roots(parts[i])) {
            part *= std::max(1.0, std::abs(root));
        }
        measure *= std::pow(part, static_cast<double>(i + 1));
    }
    return measure;
}

double mahler_measure_quadrature(const IntPolynomial& f, std::int64_t grid, unsigned jobs) {
    if (f.is_zero()) {
        throw Error(Errc::ZeroInput, "Mahler measure of the zero polynomial");
    }
    if (grid < 16) {
        throw Error(Errc::InvalidArgument, "quadrature grid must be >= 16");
    }
    // |t| = 1 on the circle, so powers of t drop out exactly.
    const IntPolynomial g = laurent_normalize(f);

    // Fixed blocks summed in order keep the result independent of the thread count.
    constexpr std::int64_t kBlocks = 64;
    std::vector<double> block_sums(kBlocks, 0.0);
    std::vector<char> block_bad(kBlocks, 0);
    const auto run_block = [&](std::int64_t b) {
        const std::int64_t lo = grid * b / kBlocks;
        const std::int64_t hi = grid * (b + 1) / kBlocks;
        double sum = 0.0;
        for (std::int64_t j = lo; j < hi; ++j) {
            const double theta = (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
            const double value = std::abs(poly_eval_complex(g, std::polar(1.0, 2.0 * std::numbers::pi * theta)));
            if (value < 1e-14) {
                block_bad[static_cast<std::size_t>(b)] = 1;
                return;
            }
            sum += std::log(value);
        }
        block_sums[static_cast<std::size_t>(b)] = sum;
    };
    jobs = std::clamp(jobs, 1u, static_cast<unsigned>(kBlocks));
    if (jobs == 1) {
        for (std::int64_t b = 0; b < kBlocks; ++b) {
            run_block(b);
        }
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                for (std::int64_t b = t; b < kBlocks; b += jobs) {
                    run_block(b);
                }
            });
        }
    }
    double total = 0.0;
    for (std::int64_t b = 0; b < kBlocks; ++b) {
        if (block_bad[static_cast<std::size_t>(b)]) {
            throw Error(Errc::NonFinite, "a quadrature node lies on a zero of the polynomial; change the grid");
        }
        total += block_sums[static_cast<std::size_t>(b)];
    }
    return total / static_cast<double>(grid);
}

double acuna_short_check(const TorusParams& params, std::int64_t n_max) {
    require_knot(params);
    if (n_max < 1) {
        throw Error(Errc::InvalidArgument, "n_max must be >= 1");
    }
    double sup = 0.0;
    for (std::int64_t n = (n_max + 1) / 2; n <= n_max; ++n) {
        const Integer h = homology_order_cyclic(params, std::max<std::int64_t>(n, 1));
        if (sgn(h) == 0) {
            continue;
        }
        long exp2 = 0;
        const double mantissa = mpz_get_d_2exp(&exp2, h.get_mpz_t());
        const double log_h = std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
        sup = std::max(sup, std::abs(std::exp(log_h / static_cast<double>(n)) - 1.0));
    }
    return sup;
}

} // namespace torus
