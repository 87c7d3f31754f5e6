#include "torus/moments.hpp"

#include "torus/error.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace torus {

namespace {

void require_knot(const TorusParams& params) {
    if (!params.is_knot()) {
        throw Error(Errc::LinkCase, "moments are defined for torus knots only; gcd(" + std::to_string(params.p) +
                                        ", " + std::to_string(params.q) + ") = " + std::to_string(params.d));
    }
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::complex<double> unit_root(std::int64_t k, std::int64_t n) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

} // namespace

RootOfUnity::RootOfUnity(std::int64_t k, std::int64_t n) {
    if (n < 1) {
        throw Error(Errc::InvalidArgument, "root of unity needs a positive order");
    }
    k = mod_floor(k, n);
    const std::int64_t g = std::gcd(k, n);
    k_ = k / g;
    n_ = n / g;
}

std::complex<double> RootOfUnity::value() const {
    return unit_root(k_, n_);
}

std::complex<double> RootOfUnity::power(std::int64_t e) const {
    const auto ke = static_cast<__int128>(k_) * e % n_;
    return unit_root(mod_floor(static_cast<std::int64_t>(ke), n_), n_);
}

Integer moment(const TorusParams& params, std::int64_t m) {
    require_knot(params);
    const std::int64_t pq = params.p * params.q;
    Integer s = 1;
    if (m % pq == 0) {
        s += pq;
    }
    if (m % params.p == 0) {
        s -= params.p;
    }
    if (m % params.q == 0) {
        s -= params.q;
    }
    return s;
}

std::complex<double> moment_bruteforce(const TorusParams& params, std::int64_t m) {
    require_knot(params);
    const std::int64_t pq = params.p * params.q;
    std::complex<double> sum = 0.0;
    for (std::int64_t j = 1; j < pq; ++j) {
        // zeta = exp(2 pi i j / pq); zeta^p = 1 iff q | j, zeta^q = 1 iff p | j
        if (j % params.q == 0 || j % params.p == 0) {
            continue;
        }
        sum += RootOfUnity(j, pq).power(m);
    }
    return sum;
}

MomentRecord moment_record(const TorusParams& params) {
    require_knot(params);
    MomentRecord rec{params, params.p * params.q, {}};
    rec.values.reserve(static_cast<std::size_t>(rec.period));
    for (std::int64_t m = 0; m < rec.period; ++m) {
        rec.values.push_back(moment(params, m));
    }
    return rec;
}

std::complex<double> generating_fn(const TorusParams& params, std::complex<double> z) {
    require_knot(params);
    const std::int64_t pq = params.p * params.q;
    const std::pair<std::int64_t, double> terms[] = {
        {pq, static_cast<double>(pq)},
        {params.p, -static_cast<double>(params.p)},
        {params.q, -static_cast<double>(params.q)},
        {1, 1.0},
    };
    std::complex<double> g = 0.0;
    for (const auto& [n, c] : terms) {
        const std::complex<double> denom = 1.0 - std::pow(z, static_cast<int>(n));
        if (std::abs(denom) < 1e-12) {
            throw Error(Errc::NearPole, "z is within 1e-12 of a pole of order dividing " + std::to_string(n));
        }
        g += c / denom;
    }
    return g;
}

std::complex<double> residue_at(const TorusParams& params, const RootOfUnity& xi) {
    require_knot(params);
    const std::int64_t pq = params.p * params.q;
    if (!xi.is_root_of_power(pq)) {
        throw Error(Errc::NotAPole, "root of order " + std::to_string(xi.order()) + " is not a pq-th root of unity");
    }
    std::complex<double> r = -xi.power(-(pq - 1));
    if (xi.is_root_of_power(params.p)) {
        r += xi.power(-(params.p - 1));
    }
    if (xi.is_root_of_power(params.q)) {
        r += xi.power(-(params.q - 1));
    }
    if (xi.is_root_of_power(1)) {
        r -= 1.0;
    }
    return r;
}

ResidueTable residue_table(const TorusParams& params) {
    require_knot(params);
    ResidueTable table{params, {}};
    const std::int64_t pq = params.p * params.q;
    for (std::int64_t k = 0; k < pq; ++k) {
        const RootOfUnity xi(k, pq);
        table.entries.emplace(xi, residue_at(params, xi));
    }
    return table;
}

std::pair<Integer, Integer> mean_variance(const MomentRecord& record) {
    Integer sum = 0;
    Integer sum_sq = 0;
    for (const auto& s : record.values) {
        sum += s;
        sum_sq += s * s;
    }
    const Integer period = record.period;
    if (sgn(sum) != 0) {
        throw Error(Errc::Internal, "moment sum over a period is " + sum.get_str() + ", expected 0");
    }
    const Integer expected = Integer(record.params.p - 1) * (record.params.q - 1);
    if (sum_sq != period * expected) {
        throw Error(Errc::Internal, "sum of squared moments " + sum_sq.get_str() + " != pq (p-1)(q-1)");
    }
    return {sum / period, sum_sq / period};
}

double parseval_check(const TorusParams& params) {
    const auto [mean, variance] = mean_variance(moment_record(params));
    double rhs = 0.0;
    for (const auto& [xi, residue] : residue_table(params).entries) {
        rhs += std::norm(residue);
    }
    return std::abs(variance.get_d() - rhs);
}

double fourier_residue_gap(const TorusParams& params) {
    const MomentRecord rec = moment_record(params);
    const std::int64_t pq = rec.period;
    double gap = 0.0;
    for (std::int64_t k = 0; k < pq; ++k) {
        const RootOfUnity omega(k, pq);
        std::complex<double> transform = 0.0;
        for (std::int64_t m = 0; m < pq; ++m) {
            transform += rec.values[static_cast<std::size_t>(m)].get_d() * omega.power(m);
        }
        const std::complex<double> predicted =
            -static_cast<double>(pq) * omega.power(pq - 1) * residue_at(params, omega);
        gap = std::max(gap, std::abs(transform - predicted));
    }
    return gap;
}

} // namespace torus
