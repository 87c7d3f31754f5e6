#pragma once

// Power sums of the roots of a torus-knot Alexander polynomial, their generating
// function, its residues on the unit circle, and the Parseval identity linking them.

#include "torus/alexander.hpp"
#include "torus/arith.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace torus {

/// exp(2 pi i k / n), kept reduced: 0 <= k < n and gcd(k, n) = 1 (so n is the exact order).
class RootOfUnity {
  public:
    RootOfUnity(std::int64_t k, std::int64_t n);

    std::int64_t numerator() const noexcept { return k_; }
    std::int64_t order() const noexcept { return n_; }
    /// True iff this root raised to the m-th power is 1.
    bool is_root_of_power(std::int64_t m) const noexcept { return m % n_ == 0; }
    std::complex<double> value() const;
    /// xi^e for any integer e, materialized in floating point after exact reduction of k e mod n.
    std::complex<double> power(std::int64_t e) const;

    friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  private:
    std::int64_t k_;
    std::int64_t n_;
};

/// S_0 .. S_{pq-1}: one full period of the moment sequence.
struct MomentRecord {
    TorusParams params;
    std::int64_t period = 0;
    std::vector<Integer> values;
};

struct ResidueTable {
    TorusParams params;
    std::map<RootOfUnity, std::complex<double>> entries;
};

/// [pq | m] pq - [p | m] p - [q | m] q + 1. Knots only (LINK_CASE otherwise).
Integer moment(const TorusParams& params, std::int64_t m);

/// Direct sum of zeta^m over pq-th roots with zeta^p != 1 and zeta^q != 1.
std::complex<double> moment_bruteforce(const TorusParams& params, std::int64_t m);

MomentRecord moment_record(const TorusParams& params);

/// pq/(1 - z^pq) - p/(1 - z^p) - q/(1 - z^q) + 1/(1 - z). Throws NEAR_POLE when any
/// denominator has magnitude below 1e-12.
std::complex<double> generating_fn(const TorusParams& params, std::complex<double> z);

/// Residue of the generating function at xi, summing only the terms whose congruence
/// xi^n = 1 holds for n in {pq, p, q, 1}. Throws NOT_A_POLE unless xi^pq = 1.
std::complex<double> residue_at(const TorusParams& params, const RootOfUnity& xi);

/// Residues at every pq-th root of unity (zero where the singularity cancels).
ResidueTable residue_table(const TorusParams& params);

/// (mean, variance) over one period. Throws INTERNAL if the mean is not 0 or the
/// variance is not (p - 1)(q - 1).
std::pair<Integer, Integer> mean_variance(const MomentRecord& record);

/// |variance - sum over pq-th roots of |residue|^2|
double parseval_check(const TorusParams& params);

/// max over pq-th roots w of |sum_m S_m w^m + pq w^(pq-1) R(w)|
double fourier_residue_gap(const TorusParams& params);

} // namespace torus
