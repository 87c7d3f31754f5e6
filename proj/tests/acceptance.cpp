// Acceptance checks. One line per criterion: "PASS name: detail" or "FAIL name: detail".
// With an argument only the named criterion runs; the exit status is 1 if any check fails.

#include "torus/alexander.hpp"
#include "torus/covers.hpp"
#include "torus/distribution.hpp"
#include "torus/iwasawa.hpp"
#include "torus/moments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace torus;

namespace {

constexpr double kMomentTol = 1e-9;
constexpr double kParsevalTol = 1e-9;
constexpr double kCountingTol = 0.02;
constexpr double kEquidistributionTol = 0.05;
constexpr double kFrequencyTol = 0.02;
constexpr double kWeylTol = 0.05;
constexpr double kMahlerQuadratureTol = 1e-2;
constexpr double kMahlerRootsTol = 1e-9;
constexpr std::int64_t kMahlerGrid = std::int64_t{1} << 20;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few failures and a count of the rest.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            if (failures_ < 6) {
                shown_ += (shown_.empty() ? "" : "; ") + what;
            }
            ++failures_;
        }
    }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) {
            return {true, summary + " (" + std::to_string(checks_) + " checks)"};
        }
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + shown_};
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::string shown_;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string pair_name(std::int64_t p, std::int64_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

template <class F>
void for_coprime(std::int64_t lo, std::int64_t hi, F&& f) {
    for (std::int64_t p = lo; p <= hi; ++p) {
        for (std::int64_t q = lo; q <= hi; ++q) {
            if (std::gcd(p, q) == 1) {
                f(p, q);
            }
        }
    }
}

Outcome factorization_oracle() {
    Tally t;
    for (std::int64_t p = 1; p <= 30; ++p) {
        for (std::int64_t q = 1; q <= 30; ++q) {
            const TorusParams params = torus_params(p, q);
            t.check(alexander_poly(params) == expand(cyclotomic_multiplicities(params)), pair_name(p, q));
        }
    }
    return t.outcome("Delta equals prod Phi_r^M_r for 1 <= p, q <= 30");
}

Outcome root_count_identity() {
    Tally t;
    for (std::int64_t p = 1; p <= 50; ++p) {
        for (std::int64_t q = 1; q <= 50; ++q) {
            Integer roots = 0;
            for (const auto& [r, m] : cyclotomic_multiplicities(torus_params(p, q)).entries) {
                roots += totient(r) * m;
            }
            t.check(roots == (p - 1) * (q - 1), pair_name(p, q));
        }
    }
    return t.outcome("sum M_r phi(r) = (p-1)(q-1) for p, q <= 50");
}

Outcome moment_oracle() {
    Tally t;
    double worst = 0.0;
    for_coprime(1, 20, [&](std::int64_t p, std::int64_t q) {
        const TorusParams params = torus_params(p, q);
        for (std::int64_t m = 0; m <= 2 * p * q; ++m) {
            const double gap = std::abs(moment_bruteforce(params, m) - moment(params, m).get_d());
            worst = std::max(worst, gap);
            t.check(gap < kMomentTol, pair_name(p, q) + " m=" + std::to_string(m) + " gap " + fmt(gap));
        }
    });
    return t.outcome("max gap " + fmt(worst) + " < " + fmt(kMomentTol));
}

Outcome mean_variance_check() {
    Tally t;
    for_coprime(1, 30, [&](std::int64_t p, std::int64_t q) {
        const auto [mean, variance] = mean_variance(moment_record(torus_params(p, q)));
        t.check(mean == 0 && variance == (p - 1) * (q - 1), pair_name(p, q));
    });
    return t.outcome("mean 0 and variance (p-1)(q-1) for coprime p, q <= 30");
}

Outcome parseval_residue() {
    Tally t;
    double worst = 0.0;
    for_coprime(1, 100, [&](std::int64_t p, std::int64_t q) {
        if (p * q > 100) {
            return;
        }
        const double gap = parseval_check(torus_params(p, q));
        worst = std::max(worst, gap);
        t.check(gap < kParsevalTol, pair_name(p, q) + " gap " + fmt(gap));
    });
    return t.outcome("max gap " + fmt(worst) + " < " + fmt(kParsevalTol));
}

Outcome counting_asymptotics() {
    Tally t;
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    const double ratio = count_coprime_pairs(1000).get_d() * zeta2 / 1e6;
    t.check(std::abs(ratio - 1.0) <= kCountingTol, "ratio " + fmt(ratio));
    // Enumerate pairs with max(p, q) = X, so each X <= 2000 gets a direct count.
    Integer enumerated = 0;
    for (std::int64_t X = 1; X <= 2000; ++X) {
        for (std::int64_t k = 1; k <= X; ++k) {
            if (std::gcd(k, X) == 1) {
                enumerated += k == X ? 1 : 2;
            }
        }
        t.check(count_coprime_pairs_mobius(X) == enumerated, "Mobius sum at X=" + std::to_string(X));
    }
    t.check(count_coprime_pairs(2000) == enumerated, "enumeration at X=2000");
    return t.outcome("#T1(1000) zeta(2)/1000^2 = " + fmt(ratio) + ", Mobius sum exact for X <= 2000");
}

Outcome equidistribution() {
    Tally t;
    std::string summary;
    for (const Family family : {Family::KnotsCoprime, Family::AllLinks}) {
        for (const char* text : {"[1/10,7/20]", "[0,1/2]"}) {
            const Arc arc = parse_arc(text);
            const ScanReport rep = scan(200, family, arc);
            const double observed = rep.observed_ratio->get_d();
            const double gap = std::abs(observed - arc.length().get_d());
            const std::string label = std::string(family_name(family)) + " " + text + " " + fmt(observed);
            t.check(gap <= kEquidistributionTol, label);
            summary += (summary.empty() ? "" : ", ") + label;
        }
    }
    return t.outcome("X=200: " + summary);
}

Outcome frequency() {
    Tally t;
    std::string summary;
    for (const std::int64_t r : {4, 6, 10, 12, 15, 30}) {
        const double observed = frequency_Fr(2000, r).get_d();
        const Rational limit = frequency_limit(r);
        const std::string label = "F_" + std::to_string(r) + "=" + fmt(observed) + " vs " + limit.get_str();
        t.check(std::abs(observed - limit.get_d()) <= kFrequencyTol, label);
        summary += (summary.empty() ? "" : ", ") + label;
    }
    return t.outcome("X=2000: " + summary);
}

Outcome weyl_sums() {
    Tally t;
    double worst = 0.0;
    for (std::int64_t k = 1; k <= 5; ++k) {
        const double w = std::abs(weyl_sum(200, k));
        worst = std::max(worst, w);
        t.check(w <= kWeylTol, "k=" + std::to_string(k) + " |W|=" + fmt(w));
    }
    return t.outcome("max |W(200, k)| = " + fmt(worst) + " for k = 1..5");
}

const std::pair<std::int64_t, std::int64_t> kKnotMatrix[] = {{2, 3}, {3, 5}, {4, 9}, {5, 6}, {2, 9}};

Outcome cover_tower() {
    Tally t;
    t.check(homology_order_cyclic(torus_params(2, 3), 2) == 3, "trefoil h_2");
    for (const auto& [p, q] : kKnotMatrix) {
        const TorusParams params = torus_params(p, q);
        for (long ell : {2L, 3L, 5L}) {
            Integer m = 1;
            for (std::int64_t n = 0; n <= 4; ++n) {
                t.check(homology_order_cyclic(params, m.get_si()) == knot_tower_closed_form(params, ell, n),
                        pair_name(p, q) + " l=" + std::to_string(ell) + " n=" + std::to_string(n));
                m *= ell;
            }
        }
    }
    return t.outcome("resultant orders equal the closed form, trefoil h_2 = 3");
}

Outcome mahler_measure() {
    Tally t;
    double worst_q = 0.0;
    double worst_r = 0.0;
    for (const auto& [p, q] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{4, 6}}) {
        const IntPolynomial delta = alexander_poly(torus_params(p, q));
        const double mq = std::abs(mahler_measure_quadrature(delta, kMahlerGrid));
        const double mr = std::abs(mahler_measure_roots(delta) - 1.0);
        worst_q = std::max(worst_q, mq);
        worst_r = std::max(worst_r, mr);
        t.check(mq <= kMahlerQuadratureTol, pair_name(p, q) + " |m| " + fmt(mq));
        t.check(mr <= kMahlerRootsTol, pair_name(p, q) + " |M-1| " + fmt(mr));
    }
    return t.outcome("max |m| " + fmt(worst_q) + ", max |M-1| " + fmt(worst_r));
}

Outcome iwasawa_knots() {
    Tally t;
    for (const auto& [p, q] : kKnotMatrix) {
        for (long ell : {2L, 3L, 5L}) {
            const std::string label = pair_name(p, q) + " l=" + std::to_string(ell);
            const IwasawaInvariants inv = knot_invariants(torus_params(p, q), ell, 4);
            t.check(inv.mu == 0 && inv.lambda == 0 && inv.nu == 0, label);
            const TowerReport tower = tower_orders_knot(torus_params(p, q), ell, 4);
            for (const auto& v : tower.valuations) {
                t.check(v && *v == 0, label + " valuation");
            }
        }
    }
    return t.outcome("(mu, lambda, nu) = (0, 0, 0) with zero tower valuations");
}

Outcome iwasawa_links() {
    Tally t;
    const std::pair<std::int64_t, std::int64_t> pairs[] = {{2, 4}, {2, 6}, {3, 3}, {3, 6}, {4, 4}, {4, 6}};
    for (const auto& [p, q] : pairs) {
        const TorusParams params = torus_params(p, q);
        std::vector<std::int64_t> ones(static_cast<std::size_t>(params.d), 1);
        std::vector<std::int64_t> mixed = ones;
        mixed[1] = 2;
        for (const auto& zv : {ones, mixed}) {
            const AdmissibleVector z = AdmissibleVector::make(zv);
            for (long ell : {2L, 3L, 5L}) {
                std::ostringstream label;
                label << pair_name(p, q) << " z=(";
                for (std::size_t i = 0; i < zv.size(); ++i) {
                    label << (i ? "," : "") << zv[i];
                }
                label << ") l=" << ell;
                const LinkIwasawaReport rep = link_invariants(params, z, ell, 1);
                label << " lambda " << rep.invariants.lambda << " vs " << rep.lambda_closed_form;
                t.check(rep.invariants.mu == 0 && rep.invariants.lambda == rep.lambda_closed_form, label.str());
                t.check(lambda_decomposition_check(params, z, ell), label.str() + " ledger");
            }
        }
    }
    for (long ell : {2L, 3L, 5L}) {
        for (std::int64_t k = 1; k <= 100; ++k) {
            std::int64_t power = 1;
            for (std::int64_t m = k; m % ell == 0; m /= ell) {
                power *= ell;
            }
            t.check(cyclotomic_quotient_lambda(k, ell) == power - 1,
                    "lambda(g_" + std::to_string(k) + ") at l=" + std::to_string(ell));
        }
    }
    return t.outcome("(mu, lambda) = (0, (d-2) l^v(alpha)) and the factor ledger holds");
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {"factorization_oracle", factorization_oracle},
    {"root_count_identity", root_count_identity},
    {"moment_oracle", moment_oracle},
    {"mean_variance", mean_variance_check},
    {"parseval_residue", parseval_residue},
    {"counting_asymptotics", counting_asymptotics},
    {"equidistribution", equidistribution},
    {"frequency", frequency},
    {"weyl_sums", weyl_sums},
    {"cover_tower", cover_tower},
    {"mahler_measure", mahler_measure},
    {"iwasawa_knots", iwasawa_knots},
    {"iwasawa_links", iwasawa_links},
};

} // namespace

int main(int argc, char** argv) {
    const std::string only = argc > 1 ? argv[1] : "";
    bool all_pass = true;
    bool matched = false;
    for (const auto& c : kCriteria) {
        if (!only.empty() && only != c.name) {
            continue;
        }
        matched = true;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    if (!matched) {
        std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
        return 2;
    }
    return all_pass ? 0 : 1;
}
