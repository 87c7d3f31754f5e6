#include "torus/arith.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace torus {

namespace {

void require_positive(const Integer& n, const char* what) {
    if (sgn(n) <= 0) {
        throw Error(Errc::InvalidArgument, std::string(what) + " requires n >= 1, got " + n.get_str());
    }
}

Factorization factorize_u64(std::uint64_t n) {
    Factorization f;
    auto take = [&](std::uint64_t p) {
        unsigned long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            f.entries.push_back({Integer(static_cast<unsigned long>(p)), e});
        }
    };
    take(2);
    take(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) {
        f.entries.push_back({Integer(static_cast<unsigned long>(n)), 1});
    }
    return f;
}

Factorization factorize_big(Integer n) {
    Factorization f;
    auto take = [&](const Integer& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) {
            f.entries.push_back({p, e});
        }
    };
    take(2);
    for (Integer p = 3; p * p <= n; p += 2) {
        take(p);
    }
    if (n > 1) {
        f.entries.push_back({n, 1});
    }
    return f;
}

} // namespace

Integer Factorization::value() const {
    Integer v = 1;
    for (const auto& [p, e] : entries) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

Factorization factorize(const Integer& n) {
    require_positive(n, "factorize");
    if (n.fits_ulong_p()) {
        return factorize_u64(n.get_ui());
    }
    return factorize_big(n);
}

int mobius(const Integer& n) {
    require_positive(n, "mobius");
    const auto f = factorize(n);
    for (const auto& pe : f.entries) {
        if (pe.exponent > 1) {
            return 0;
        }
    }
    return f.size() % 2 == 0 ? 1 : -1;
}

Integer totient(const Integer& n) {
    require_positive(n, "totient");
    Integer phi = n;
    for (const auto& pe : factorize(n).entries) {
        phi /= pe.prime;
        phi *= pe.prime - 1;
    }
    return phi;
}

unsigned long omega(const Integer& n) {
    require_positive(n, "omega");
    return factorize(n).size();
}

Integer num_divisors(const Integer& n) {
    require_positive(n, "num_divisors");
    Integer count = 1;
    for (const auto& pe : factorize(n).entries) {
        count *= pe.exponent + 1;
    }
    return count;
}

bool is_prime(const Integer& n) {
    if (n < 2) {
        return false;
    }
    const auto f = factorize(n);
    return f.size() == 1 && f.entries.front().exponent == 1;
}

unsigned long padic_valuation(const Integer& ell, const Integer& n) {
    if (!is_prime(ell)) {
        throw Error(Errc::InvalidArgument, "padic_valuation requires a prime, got " + ell.get_str());
    }
    if (sgn(n) == 0) {
        throw Error(Errc::InvalidArgument, "padic_valuation of 0 is infinite");
    }
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t());
}

std::vector<Integer> divisors(const Integer& n) {
    require_positive(n, "divisors");
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(n).entries) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t to_int64(const Integer& n) {
    if (!n.fits_slong_p()) {
        throw Error(Errc::InvalidArgument, "value " + n.get_str() + " exceeds the 64-bit range");
    }
    return n.get_si();
}

namespace detail {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
    return std::gcd(a, b);
}

int mobius_u64(std::uint64_t n) noexcept {
    int sign = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            sign = -sign;
        }
    }
    if (n > 1) {
        sign = -sign;
    }
    return sign;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t k = 1; k <= n / k; ++k) {
        if (n % k == 0) {
            small.push_back(k);
            if (k != n / k) {
                large.push_back(n / k);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

} // namespace torus
