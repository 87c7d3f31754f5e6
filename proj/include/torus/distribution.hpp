#pragma once

// Family scans over torus knots and links of height <= X: root counts on arcs,
// cyclotomic-order frequencies and averaged power sums.

#include "torus/alexander.hpp"
#include "torus/arith.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torus {

/// Closed arc [a, b] of the circle, parametrized by theta in [0, 1] with z = exp(2 pi i theta).
/// Theta = 0 and theta = 1 name the same root; it is counted once if either endpoint is covered.
struct Arc {
    Rational a;
    Rational b;

    /// Throws INVALID_ARGUMENT unless 0 <= a <= b <= 1.
    static Arc make(Rational a, Rational b);
    Rational length() const { return b - a; }
    std::string to_string() const;
};

/// Parses "[a,b]" with each endpoint an integer or "num/den". Decimal notation is rejected.
Arc parse_arc(std::string_view text);
Rational parse_rational(std::string_view text);

enum class Family { KnotsCoprime, AllLinks };

std::string_view family_name(Family family);
Family parse_family(std::string_view text);

struct PairRow {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t d = 0;
    Integer roots_total;
    Integer roots_in_arc;
};

struct ScanReport {
    std::int64_t X = 0;
    Family family = Family::KnotsCoprime;
    Integer t_count;     // number of pairs in the family
    Integer omega_count; // roots counted with multiplicity
    std::optional<Arc> arc;
    Integer arc_count;
    Rational predicted_ratio;
    /// arc_count / omega_count; empty when the family has no roots (X = 1).
    std::optional<Rational> observed_ratio;
    /// Filled only when requested; row-major (p outer, q inner).
    std::vector<PairRow> rows;
};

struct ScanOptions {
    unsigned jobs = 1;
    bool keep_rows = false;
};

/// #{(p, q) : 1 <= p, q <= X, gcd(p, q) = 1} by enumeration.
Integer count_coprime_pairs(std::int64_t X);
/// Same count from sum_{d <= X} mu(d) floor(X/d)^2.
Integer count_coprime_pairs_mobius(std::int64_t X);

/// Sum of (p - 1)(q - 1) over the family.
Integer count_roots_total(std::int64_t X, Family family);
/// (X (X - 1) / 2)^2
Integer count_roots_all_links_closed_form(std::int64_t X);

/// Number of roots of Delta_{p,q} on the arc, with multiplicity. Uses the root-set identity
/// d * mu_L - mu_p - mu_q + mu_1 and counts n-th roots on the arc in O(1).
Integer arc_count_single(const TorusParams& params, const Arc& arc);
/// Same count as sum_{r | L} M_r N_r(arc), N_r by Möbius inversion over divisors of r.
Integer arc_count_by_order(const TorusParams& params, const Arc& arc);
/// Same count by walking k = 0 .. L-1 and looking up the multiplicity of exp(2 pi i k / L).
Integer arc_count_enumerate(const TorusParams& params, const Arc& arc);

ScanReport scan(std::int64_t X, Family family, const Arc& arc, const ScanOptions& options = {});

/// F_r(X): fraction of coprime pairs with r | pq, r does not divide p, r does not divide q. Requires r >= 2.
Rational frequency_Fr(std::int64_t X, std::int64_t r, unsigned jobs = 1);
/// (2^omega(r) - 2) / r
Rational frequency_limit(std::int64_t r);
/// Density of the same event among coprime pairs, accounting for the local coprimality
/// condition at each prime dividing r: (2^omega(r) - 2)/r * prod_{l | r} l/(l + 1).
Rational frequency_local_density(std::int64_t r);

/// (1 / #roots) * sum over coprime pairs of S_k(p, q). Equals 1 at k = 0.
std::complex<double> weyl_sum(std::int64_t X, std::int64_t k, unsigned jobs = 1);

} // namespace torus
