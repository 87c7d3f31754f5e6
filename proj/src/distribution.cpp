#include "torus/distribution.hpp"

#include "torus/error.hpp"
#include "torus/moments.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <thread>

namespace torus {

namespace {

void require_height(std::int64_t X) {
    if (X < 1) {
        throw Error(Errc::InvalidArgument, "height X must be >= 1");
    }
}

// Runs body(p, state) for p = 1..X, spreading rows of the p-loop over `jobs` threads.
// Each thread owns one State; the caller merges them in thread order.
template <class State, class Body>
std::vector<State> parallel_rows(std::int64_t X, unsigned jobs, Body body) {
    jobs = std::max(1u, jobs);
    if (static_cast<std::int64_t>(jobs) > X) {
        jobs = static_cast<unsigned>(X);
    }
    std::vector<State> states(jobs);
    if (jobs == 1) {
        for (std::int64_t p = 1; p <= X; ++p) {
            body(p, states[0]);
        }
        return states;
    }
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                for (auto p = static_cast<std::int64_t>(t) + 1; p <= X; p += jobs) {
                    body(p, states[t]);
                }
            });
        }
    }
    return states;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// #{k in [0, n-1] : a <= k/n <= b}, without the theta = 1 convention.
Integer count_grid_points(std::int64_t n, const Arc& arc) {
    const Integer nn = n;
    Integer lo = ceil_div(arc.a.get_num() * nn, arc.a.get_den());
    Integer hi = floor_div(arc.b.get_num() * nn, arc.b.get_den());
    if (hi > nn - 1) {
        hi = nn - 1;
    }
    if (hi < lo) {
        return 0;
    }
    return hi - lo + 1;
}

// True when the arc reaches theta = 1 but not theta = 0, so the root 1 enters only through theta = 1.
bool root_one_only_at_end(const Arc& arc) {
    return arc.b == 1 && sgn(arc.a) > 0;
}

// n-th roots of unity with theta on the arc.
Integer count_nth_roots(std::int64_t n, const Arc& arc) {
    Integer c = count_grid_points(n, arc);
    if (root_one_only_at_end(arc)) {
        c += 1;
    }
    return c;
}

bool theta_on_arc(std::int64_t k, std::int64_t n, const Arc& arc) {
    const Rational theta(k, n);
    if (arc.a <= theta && theta <= arc.b) {
        return true;
    }
    return k == 0 && arc.b == 1;
}

} // namespace

Arc Arc::make(Rational a, Rational b) {
    a.canonicalize();
    b.canonicalize();
    if (sgn(a) < 0 || b > 1 || a > b) {
        throw Error(Errc::InvalidArgument, "arc endpoints must satisfy 0 <= a <= b <= 1, got [" + a.get_str() + ", " +
                                               b.get_str() + "]");
    }
    return Arc{std::move(a), std::move(b)};
}

std::string Arc::to_string() const {
    return "[" + a.get_str() + "," + b.get_str() + "]";
}

Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'"); };
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw bad();
    }
    const Integer n{std::string(num)};
    const Integer d{std::string(den)};
    if (sgn(d) == 0) {
        throw bad();
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Arc parse_arc(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw Error(Errc::InvalidArgument, "arc must look like [a,b], got '" + std::string(text) + "'");
    }
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw Error(Errc::InvalidArgument, "arc must have two endpoints separated by ','");
    }
    return Arc::make(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

std::string_view family_name(Family family) {
    return family == Family::KnotsCoprime ? "knots_coprime" : "all_links";
}

Family parse_family(std::string_view text) {
    if (text == "coprime" || text == "knots" || text == "knots_coprime") {
        return Family::KnotsCoprime;
    }
    if (text == "all" || text == "links" || text == "all_links") {
        return Family::AllLinks;
    }
    throw Error(Errc::InvalidArgument, "unknown family '" + std::string(text) + "' (use coprime or all)");
}

Integer count_coprime_pairs(std::int64_t X) {
    require_height(X);
    std::uint64_t count = 0;
    for (std::uint64_t p = 1; p <= static_cast<std::uint64_t>(X); ++p) {
        for (std::uint64_t q = 1; q <= static_cast<std::uint64_t>(X); ++q) {
            count += detail::gcd_u64(p, q) == 1;
        }
    }
    return Integer(static_cast<unsigned long>(count));
}

Integer count_coprime_pairs_mobius(std::int64_t X) {
    require_height(X);
    Integer total = 0;
    for (std::int64_t d = 1; d <= X; ++d) {
        const int mu = detail::mobius_u64(static_cast<std::uint64_t>(d));
        if (mu == 0) {
            continue;
        }
        const Integer f = X / d;
        total += mu * (f * f);
    }
    return total;
}

Integer count_roots_total(std::int64_t X, Family family) {
    require_height(X);
    Integer total = 0;
    for (std::int64_t p = 1; p <= X; ++p) {
        for (std::int64_t q = 1; q <= X; ++q) {
            if (family == Family::KnotsCoprime && std::gcd(p, q) != 1) {
                continue;
            }
            total += Integer(p - 1) * (q - 1);
        }
    }
    return total;
}

Integer count_roots_all_links_closed_form(std::int64_t X) {
    require_height(X);
    const Integer h = Integer(X) * (X - 1) / 2;
    return h * h;
}

Integer arc_count_single(const TorusParams& params, const Arc& arc) {
    if (params.p == 1 || params.q == 1) {
        return 0;
    }
    return params.d * count_nth_roots(params.L, arc) - count_nth_roots(params.p, arc) -
           count_nth_roots(params.q, arc) + count_nth_roots(1, arc);
}

Integer arc_count_by_order(const TorusParams& params, const Arc& arc) {
    Integer total = 0;
    for (const auto& [r, mult] : cyclotomic_multiplicities(params).entries) {
        // primitive r-th roots: sum_{e | r} mu(e) * #{(r/e)-th roots on the arc}
        Integer n_r = 0;
        for (std::uint64_t e : detail::divisors_u64(static_cast<std::uint64_t>(r))) {
            const int mu = detail::mobius_u64(e);
            if (mu != 0) {
                n_r += mu * count_grid_points(r / static_cast<std::int64_t>(e), arc);
            }
        }
        if (r == 1 && root_one_only_at_end(arc)) {
            n_r += 1;
        }
        total += mult * n_r;
    }
    return total;
}

Integer arc_count_enumerate(const TorusParams& params, const Arc& arc) {
    const auto mult = cyclotomic_multiplicities(params).entries;
    Integer total = 0;
    for (std::int64_t k = 0; k < params.L; ++k) {
        const std::int64_t order = params.L / std::gcd(k, params.L);
        const auto it = mult.find(order);
        if (it != mult.end() && theta_on_arc(k, params.L, arc)) {
            total += it->second;
        }
    }
    return total;
}

ScanReport scan(std::int64_t X, Family family, const Arc& arc, const ScanOptions& options) {
    require_height(X);
    struct State {
        Integer pairs = 0;
        Integer roots = 0;
        Integer in_arc = 0;
        std::vector<std::vector<PairRow>> rows; // indexed by row within this thread
    };
    const auto states = parallel_rows<State>(X, options.jobs, [&](std::int64_t p, State& s) {
        std::vector<PairRow> row;
        for (std::int64_t q = 1; q <= X; ++q) {
            const std::int64_t d = std::gcd(p, q);
            if (family == Family::KnotsCoprime && d != 1) {
                continue;
            }
            const TorusParams params = torus_params(p, q);
            const Integer total = Integer(p - 1) * (q - 1);
            const Integer hits = arc_count_single(params, arc);
            s.pairs += 1;
            s.roots += total;
            s.in_arc += hits;
            if (options.keep_rows) {
                row.push_back(PairRow{p, q, d, total, hits});
            }
        }
        if (options.keep_rows) {
            s.rows.push_back(std::move(row));
        }
    });

    ScanReport report;
    report.X = X;
    report.family = family;
    report.arc = arc;
    report.t_count = 0;
    report.omega_count = 0;
    report.arc_count = 0;
    for (const auto& s : states) {
        report.t_count += s.pairs;
        report.omega_count += s.roots;
        report.arc_count += s.in_arc;
    }
    report.predicted_ratio = arc.length();
    if (sgn(report.omega_count) != 0) {
        Rational observed(report.arc_count, report.omega_count);
        observed.canonicalize();
        report.observed_ratio = observed;
    }
    if (options.keep_rows) {
        // Thread t handled p = t+1, t+1+jobs, ...; interleave back into row-major order.
        const std::size_t jobs = states.size();
        for (std::int64_t p = 1; p <= X; ++p) {
            const std::size_t t = static_cast<std::size_t>(p - 1) % jobs;
            const std::size_t i = static_cast<std::size_t>(p - 1) / jobs;
            for (const auto& row : states[t].rows[i]) {
                report.rows.push_back(row);
            }
        }
    }
    return report;
}

Rational frequency_Fr(std::int64_t X, std::int64_t r, unsigned jobs) {
    require_height(X);
    if (r < 2) {
        throw Error(Errc::InvalidArgument, "frequency F_r requires r >= 2");
    }
    struct State {
        std::uint64_t pairs = 0;
        std::uint64_t hits = 0;
    };
    const auto ur = static_cast<std::uint64_t>(r);
    const auto states = parallel_rows<State>(X, jobs, [&](std::int64_t p64, State& s) {
        const auto p = static_cast<std::uint64_t>(p64);
        const std::uint64_t pr = p % ur;
        for (std::uint64_t q = 1; q <= static_cast<std::uint64_t>(X); ++q) {
            if (detail::gcd_u64(p, q) != 1) {
                continue;
            }
            ++s.pairs;
            const std::uint64_t qr = q % ur;
            if (pr != 0 && qr != 0 && static_cast<unsigned __int128>(pr) * qr % ur == 0) {
                ++s.hits;
            }
        }
    });
    std::uint64_t pairs = 0;
    std::uint64_t hits = 0;
    for (const auto& s : states) {
        pairs += s.pairs;
        hits += s.hits;
    }
    Rational f(Integer(static_cast<unsigned long>(hits)), Integer(static_cast<unsigned long>(pairs)));
    f.canonicalize();
    return f;
}

Rational frequency_limit(std::int64_t r) {
    if (r < 2) {
        throw Error(Errc::InvalidArgument, "frequency limit requires r >= 2");
    }
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, omega(Integer(static_cast<long>(r))));
    Rational f(num - 2, Integer(static_cast<long>(r)));
    f.canonicalize();
    return f;
}

Rational frequency_local_density(std::int64_t r) {
    Rational f = frequency_limit(r);
    for (const auto& pe : factorize(Integer(static_cast<long>(r))).entries) {
        f *= Rational(pe.prime, pe.prime + 1);
    }
    f.canonicalize();
    return f;
}

std::complex<double> weyl_sum(std::int64_t X, std::int64_t k, unsigned jobs) {
    require_height(X);
    struct State {
        Integer moment_sum = 0;
        Integer roots = 0;
    };
    const auto states = parallel_rows<State>(X, jobs, [&](std::int64_t p, State& s) {
        for (std::int64_t q = 1; q <= X; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            s.moment_sum += moment(torus_params(p, q), k);
            s.roots += Integer(p - 1) * (q - 1);
        }
    });
    Integer moment_sum = 0;
    Integer roots = 0;
    for (const auto& s : states) {
        moment_sum += s.moment_sum;
        roots += s.roots;
    }
    if (sgn(roots) == 0) {
        throw Error(Errc::InvalidArgument, "no roots in the family at height " + std::to_string(X));
    }
    Rational w(moment_sum, roots);
    w.canonicalize();
    return {w.get_d(), 0.0};
}

} // namespace torus
