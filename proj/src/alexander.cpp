#include "torus/alexander.hpp"

#include "torus/error.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace torus {

namespace {

// (t^k - 1)^e by the binomial theorem.
IntPolynomial binomial_power(std::int64_t k, std::int64_t e) {
    std::vector<Integer> c(static_cast<std::size_t>(k * e) + 1);
    Integer choose = 1;
    for (std::int64_t j = 0; j <= e; ++j) {
        // coefficient of t^{kj} is C(e, j) (-1)^{e-j}
        c[static_cast<std::size_t>(k * j)] = ((e - j) % 2 == 0) ? choose : Integer(-choose);
        choose *= e - j;
        choose /= j + 1;
    }
    return IntPolynomial(std::move(c));
}

void require_prime(const Integer& ell) {
    if (!is_prime(ell)) {
        throw Error(Errc::InvalidArgument, "expected a prime, got " + ell.get_str());
    }
}

} // namespace

TorusParams torus_params(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) {
        throw Error(Errc::InvalidArgument,
                    "torus parameters must be positive, got (" + std::to_string(p) + ", " + std::to_string(q) + ")");
    }
    TorusParams t;
    t.p = p;
    t.q = q;
    t.d = std::gcd(p, q);
    t.p_prime = p / t.d;
    t.q_prime = q / t.d;
    if (t.p_prime > std::numeric_limits<std::int64_t>::max() / q) {
        throw Error(Errc::InvalidArgument, "lcm(p, q) exceeds the 64-bit range");
    }
    t.L = t.p_prime * q;
    return t;
}

AdmissibleVector AdmissibleVector::make(std::vector<std::int64_t> z) {
    if (z.empty()) {
        throw Error(Errc::NonAdmissible, "admissible vector must be nonempty");
    }
    std::int64_t g = 0;
    std::int64_t alpha = 0;
    for (std::int64_t zi : z) {
        if (zi == 0) {
            throw Error(Errc::NonAdmissible, "admissible vector has a zero entry");
        }
        g = std::gcd(g, zi);
        alpha += zi;
    }
    if (g != 1) {
        throw Error(Errc::NonAdmissible, "entries of an admissible vector must have gcd 1, got " + std::to_string(g));
    }
    return AdmissibleVector{std::move(z), alpha};
}

IntPolynomial alexander_poly(const TorusParams& params) {
    if (params.p == 1 || params.q == 1) {
        return IntPolynomial{1};
    }
    IntPolynomial num = binomial_power(params.L, params.d) * IntPolynomial{-1, 1};
    num = poly_exact_div(num, IntPolynomial::binomial(params.p));
    num = poly_exact_div(num, IntPolynomial::binomial(params.q));
    return laurent_normalize(num);
}

CycFactorization cyclotomic_multiplicities(const TorusParams& params) {
    CycFactorization out{params, {}};
    for (std::uint64_t r64 : detail::divisors_u64(static_cast<std::uint64_t>(params.L))) {
        const auto r = static_cast<std::int64_t>(r64);
        const std::int64_t m = params.d - (params.p % r == 0) - (params.q % r == 0) + (r == 1);
        if (m < 0) {
            throw Error(Errc::Internal, "negative cyclotomic multiplicity");
        }
        if (m > 0) {
            out.entries.emplace(r, m);
        }
    }
    return out;
}

IntPolynomial expand(const CycFactorization& factorization) {
    IntPolynomial f{1};
    for (const auto& [r, m] : factorization.entries) {
        f = f * poly_pow(cyclotomic(r), m);
    }
    return f;
}

namespace {

void check_specialization(const TorusParams& params, const AdmissibleVector& z) {
    if (static_cast<std::int64_t>(z.z.size()) != params.d) {
        throw Error(Errc::NonAdmissible, "admissible vector needs " + std::to_string(params.d) + " entries, got " +
                                             std::to_string(z.z.size()));
    }
    // Re-validate in case the vector was assembled by hand.
    (void)AdmissibleVector::make(z.z);
    if (z.alpha == 0) {
        throw Error(Errc::ZeroAlpha, "sum of the admissible vector is 0");
    }
}

} // namespace

IntPolynomial specialize_z(const TorusParams& params, const AdmissibleVector& z) {
    if (params.is_knot()) {
        return alexander_poly(params);
    }
    check_specialization(params, z);
    // A negative alpha changes each binomial by a unit -X^{-k}.
    const std::int64_t a = z.alpha < 0 ? -z.alpha : z.alpha;
    IntPolynomial num = binomial_power(a * params.p_prime * params.q_prime, params.d) * IntPolynomial{-1, 1};
    num = poly_exact_div(num, IntPolynomial::binomial(a * params.p_prime));
    num = poly_exact_div(num, IntPolynomial::binomial(a * params.q_prime));
    return laurent_normalize(num);
}

IntPolynomial hosokawa(const TorusParams& params, const AdmissibleVector& z) {
    if (params.is_knot()) {
        throw Error(Errc::KnotCase, "the Hosokawa polynomial is defined for links (d >= 2)");
    }
    check_specialization(params, z);
    const std::int64_t a = z.alpha < 0 ? -z.alpha : z.alpha;
    IntPolynomial num = poly_pow(IntPolynomial::geometric(a * params.p_prime * params.q_prime), params.d);
    num = poly_exact_div(num, IntPolynomial::geometric(a * params.p_prime));
    num = poly_exact_div(num, IntPolynomial::geometric(a * params.q_prime));
    return num;
}

Integer determinant(const TorusParams& params) {
    return abs(poly_eval_int(alexander_poly(params), -1));
}

Integer determinant_parity_formula(const TorusParams& params) {
    if (!params.is_knot()) {
        throw Error(Errc::LinkCase, "the parity formula covers knots only");
    }
    if (params.p % 2 == 0) {
        return params.q;
    }
    if (params.q % 2 == 0) {
        return params.p;
    }
    return 1;
}

bool ell_colorable(const TorusParams& params, const Integer& ell) {
    require_prime(ell);
    const Integer det = determinant(params);
    return mpz_divisible_p(det.get_mpz_t(), ell.get_mpz_t()) != 0;
}

std::int64_t coloring_zero_order(const TorusParams& params, const Integer& ell) {
    require_prime(ell);
    return root_multiplicity_mod(alexander_poly(params), -1, ell);
}

} // namespace torus
