#include "torus/polyring.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace torus {

namespace {

bool is_unit(const Integer& c) {
    return c == 1 || c == -1;
}

Integer ipow(const Integer& base, std::int64_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

void require_nonneg_degree(std::int64_t k, const char* what) {
    if (k < 0) {
        throw Error(Errc::InvalidArgument, std::string(what) + " requires a nonnegative exponent");
    }
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(std::int64_t k, const Integer& c) {
    require_nonneg_degree(k, "monomial");
    std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial(std::int64_t k) {
    require_nonneg_degree(k, "binomial");
    auto f = monomial(k);
    f -= IntPolynomial{1};
    return f;
}

IntPolynomial IntPolynomial::geometric(std::int64_t k) {
    if (k < 1) {
        throw Error(Errc::InvalidArgument, "geometric sum needs k >= 1");
    }
    return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Integer IntPolynomial::coeff(std::int64_t i) const {
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
    if (coeffs_.empty()) {
        throw Error(Errc::ZeroInput, "zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

std::int64_t IntPolynomial::low_degree() const {
    if (coeffs_.empty()) {
        throw Error(Errc::ZeroInput, "zero polynomial has no lowest term");
    }
    std::int64_t i = 0;
    while (sgn(coeffs_[static_cast<std::size_t>(i)]) == 0) {
        ++i;
    }
    return i;
}

std::string IntPolynomial::to_string(char var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::int64_t i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << var;
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& g) {
    if (g.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(g.coeffs_.size());
    }
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
        coeffs_[i] += g.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& g) {
    if (g.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(g.coeffs_.size());
    }
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
        coeffs_[i] -= g.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
    for (auto& a : coeffs_) {
        a *= c;
    }
    trim();
    return *this;
}

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        return {};
    }
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Integer> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
    return poly_mul(f, g);
}

IntPolynomial poly_pow(const IntPolynomial& f, std::int64_t e) {
    require_nonneg_degree(e, "poly_pow");
    IntPolynomial result{1};
    IntPolynomial base = f;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

IntPolynomial poly_exact_div(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) {
        throw Error(Errc::DivByZero, "division by the zero polynomial");
    }
    if (f.is_zero()) {
        return {};
    }
    const std::int64_t n = g.degree();
    if (f.degree() < n) {
        throw Error(Errc::NotDivisible, f.to_string() + " is not divisible by " + g.to_string());
    }
    std::vector<Integer> r = f.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(f.degree() - n) + 1);
    const Integer& lead = g.leading();
    const auto& gc = g.coeffs();
    for (std::int64_t k = f.degree() - n; k >= 0; --k) {
        Integer& top = r[static_cast<std::size_t>(k + n)];
        if (sgn(top) == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw Error(Errc::NotDivisible, f.to_string() + " is not divisible by " + g.to_string());
        }
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::int64_t j = 0; j <= n; ++j) {
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                       gc[static_cast<std::size_t>(j)].get_mpz_t());
        }
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const auto& c : r) {
        if (sgn(c) != 0) {
            throw Error(Errc::NotDivisible, f.to_string() + " is not divisible by " + g.to_string());
        }
    }
    return IntPolynomial(std::move(q));
}

DivRem poly_divrem_unit(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) {
        throw Error(Errc::DivByZero, "division by the zero polynomial");
    }
    if (!is_unit(g.leading())) {
        throw Error(Errc::InvalidArgument, "divisor must have leading coefficient +-1");
    }
    const std::int64_t n = g.degree();
    if (f.degree() < n) {
        return {IntPolynomial{}, f};
    }
    const bool negate = g.leading() < 0;
    std::vector<Integer> r = f.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(f.degree() - n) + 1);
    const auto& gc = g.coeffs();
    for (std::int64_t k = f.degree() - n; k >= 0; --k) {
        Integer c = r[static_cast<std::size_t>(k + n)];
        if (sgn(c) == 0) {
            continue;
        }
        if (negate) {
            c = -c;
        }
        for (std::int64_t j = 0; j <= n; ++j) {
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                       gc[static_cast<std::size_t>(j)].get_mpz_t());
        }
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    r.resize(static_cast<std::size_t>(n));
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial cyclotomic(std::int64_t r) {
    if (r < 1) {
        throw Error(Errc::InvalidArgument, "cyclotomic requires r >= 1");
    }
    // Every divisor of a divisor of r divides r, so one pass over the divisors suffices.
    const auto divs = detail::divisors_u64(static_cast<std::uint64_t>(r));
    std::map<std::uint64_t, IntPolynomial> phi;
    for (std::uint64_t d : divs) {
        IntPolynomial f = IntPolynomial::binomial(static_cast<std::int64_t>(d));
        for (const auto& [e, phi_e] : phi) {
            if (d % e == 0) {
                f = poly_exact_div(f, phi_e);
            }
        }
        phi.emplace(d, std::move(f));
    }
    return phi.at(static_cast<std::uint64_t>(r));
}

std::complex<double> poly_eval_complex(const IntPolynomial& f, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + it->get_d();
    }
    return acc;
}

Integer poly_eval_int(const IntPolynomial& f, const Integer& x) {
    Integer acc = 0;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPolynomial derivative(const IntPolynomial& f) {
    if (f.degree() < 1) {
        return {};
    }
    std::vector<Integer> d(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        d[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
    }
    return IntPolynomial(std::move(d));
}

IntPolynomial taylor_shift_one(const IntPolynomial& f) {
    std::vector<Integer> c = f.coeffs();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            c[j] += c[j + 1];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial compose_power(const IntPolynomial& f, std::int64_t k) {
    if (k < 1) {
        throw Error(Errc::InvalidArgument, "compose_power needs k >= 1");
    }
    if (f.is_zero()) {
        return {};
    }
    std::vector<Integer> c(static_cast<std::size_t>(f.degree() * k) + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        c[i * static_cast<std::size_t>(k)] = f.coeffs()[i];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial laurent_normalize(const IntPolynomial& f) {
    if (f.is_zero()) {
        return {};
    }
    std::vector<Integer> c(f.coeffs().begin() + f.low_degree(), f.coeffs().end());
    if (c.back() < 0) {
        for (auto& x : c) {
            x = -x;
        }
    }
    return IntPolynomial(std::move(c));
}

std::int64_t root_multiplicity_mod(const IntPolynomial& f, const Integer& a, const Integer& ell) {
    if (!is_prime(ell)) {
        throw Error(Errc::InvalidArgument, "reduction modulus must be prime, got " + ell.get_str());
    }
    std::vector<Integer> c = f.coeffs();
    for (auto& x : c) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), ell.get_mpz_t());
    }
    while (!c.empty() && sgn(c.back()) == 0) {
        c.pop_back();
    }
    if (c.empty()) {
        throw Error(Errc::InvalidArgument, "polynomial vanishes modulo " + ell.get_str());
    }
    std::int64_t mult = 0;
    while (c.size() > 1) {
        // Synthetic division by (t - a) over F_ell; c[0] becomes the remainder.
        std::vector<Integer> q(c.size() - 1);
        Integer carry = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            Integer v = c[i] + carry * a;
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), ell.get_mpz_t());
            if (i == 0) {
                carry = v;
            } else {
                q[i - 1] = v;
                carry = v;
            }
        }
        if (sgn(carry) != 0) {
            break;
        }
        c = std::move(q);
        ++mult;
    }
    return mult;
}

Integer content(const IntPolynomial& f) {
    if (f.is_zero()) {
        return 0;
    }
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return f.leading() < 0 ? Integer(-g) : g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) {
        return {};
    }
    const Integer c = content(f);
    std::vector<Integer> v = f.coeffs();
    for (auto& x : v) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return IntPolynomial(std::move(v));
}

namespace {

// lc(b)^k * a = q * b + r with deg r < deg b; returns r.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r = a.coeffs();
    const std::int64_t n = b.degree();
    const Integer& lead = b.leading();
    const auto& bc = b.coeffs();
    for (std::int64_t top = static_cast<std::int64_t>(r.size()) - 1; top >= n; --top) {
        const Integer c = r[static_cast<std::size_t>(top)];
        if (sgn(c) == 0) {
            continue;
        }
        for (auto& x : r) {
            x *= lead;
        }
        for (std::int64_t j = 0; j <= n; ++j) {
            mpz_submul(r[static_cast<std::size_t>(top - n + j)].get_mpz_t(), c.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    r.resize(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    return IntPolynomial(std::move(r));
}

} // namespace

IntPolynomial poly_gcd(IntPolynomial f, IntPolynomial g) {
    if (f.is_zero()) {
        return primitive_part(g);
    }
    if (g.is_zero()) {
        return primitive_part(f);
    }
    f = primitive_part(f);
    g = primitive_part(g);
    if (f.degree() < g.degree()) {
        std::swap(f, g);
    }
    while (!g.is_zero()) {
        IntPolynomial r = pseudo_remainder(f, g);
        f = std::move(g);
        g = primitive_part(r);
    }
    return primitive_part(f);
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f) {
    if (f.is_zero()) {
        throw Error(Errc::ZeroInput, "square-free decomposition of 0");
    }
    std::vector<IntPolynomial> out;
    IntPolynomial a = primitive_part(f);
    if (a.degree() == 0) {
        return out;
    }
    IntPolynomial g = poly_gcd(a, derivative(a));
    IntPolynomial w = poly_exact_div(a, g);
    while (w.degree() > 0) {
        IntPolynomial y = poly_gcd(w, g);
        out.push_back(poly_exact_div(w, y));
        g = poly_exact_div(g, y);
        w = std::move(y);
    }
    return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && sgn(m[pivot][k]) == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& x = m[i][j];
                x *= m[k][k];
                mpz_submul(x.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

Integer resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        throw Error(Errc::ZeroInput, "resultant with the zero polynomial");
    }
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
    // Column c holds the coefficient of t^(size - 1 - c).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= m; ++k) {
            s[i][i + m - k] = f.coeffs()[k];
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k <= n; ++k) {
            s[n + j][j + n - k] = g.coeffs()[k];
        }
    }
    return bareiss_determinant(std::move(s));
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        throw Error(Errc::ZeroInput, "resultant with the zero polynomial");
    }
    const std::int64_t m = f.degree();
    const std::int64_t n = g.degree();
    // Res(f, g) = lc(f)^(n - k) Res(f, g mod f), k = deg(g mod f), when lc(f) = +-1.
    if (m >= 1 && n >= m && is_unit(f.leading())) {
        const IntPolynomial r = poly_divrem_unit(g, f).remainder;
        if (r.is_zero()) {
            return 0;
        }
        return ipow(f.leading(), n - r.degree()) * resultant_sylvester(f, r);
    }
    if (n >= 1 && m > n && is_unit(g.leading())) {
        // Res(f, g) = (-1)^(mn) Res(g, f)
        Integer r = resultant(g, f);
        return (m * n) % 2 == 0 ? r : Integer(-r);
    }
    return resultant_sylvester(f, g);
}

} // namespace torus
