#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsbm/int128.hpp"

namespace rsbm {

/// Model parameters: a graph on 2n vertices where each vertex has d1
/// neighbors inside its community and d2 across.
struct RsbmParams {
    int n = 0;
    int d1 = 0;
    int d2 = 0;

    // Violated structural invariants by name (parity, d1 < n, d2 <= n,
    // positivity); empty when the parameters can be sampled.
    std::vector<std::string> violations() const;
    // Unmet standing assumptions (min{d1,d2} >= 3) that do not block
    // sampling but void the connectivity/recovery guarantees.
    std::vector<std::string> advisories() const;
    // Throws ValidationError naming the first violated invariant.
    void validate() const;
};

/// Closed-form quantities derived from (d1, d2).
///
/// alpha and beta are the roots of x^2 - (d1-d2)x + (d1+d2-1) = 0; they are
/// real exactly when the spectral condition (d1-d2)^2 > 4(d1+d2-1) holds.
/// coeff_a/coeff_b solve z_k = coeff_a*alpha^k + coeff_b*beta^k from the
/// first two sequence values. tv_rate1/tv_rate2 are the per-vertex decay
/// bases of the total-variation separation between the planted model and
/// the uniform regular graph; both lie in (0,1) for d1, d2 >= 3.
struct DerivedQuantities {
    int d1 = 0;
    int d2 = 0;
    bool spectral_condition = false; // (d1-d2)^2 > 4(d1+d2-1)
    bool majority_condition = false; // d1 > d2 + 4
    bool roots_real = false;
    double alpha = 0.0;
    double beta = 0.0;
    double coeff_a = 0.0; // A in z_k = A alpha^k + B beta^k
    double coeff_b = 0.0;
    double tv_rate1 = 0.0;
    double tv_rate2 = 0.0;
};

// Degree-level formulas accept any d1, d2 >= 1 (the graph-level invariants
// d1, d2 >= 3 etc. are enforced by RsbmParams::validate at sampling time).

DerivedQuantities check_thresholds(int d1, int d2);

/// z_1..z_l of the signed boundary-count recurrence
/// z_k = (d1-d2) z_{k-1} - (d1+d2-1) z_{k-2}, seeded with
/// z_1 = d1-d2 and z_2 = (d1-d2)^2 - (d1+d2). Exact integer arithmetic.
std::vector<int128> z_sequence(int d1, int d2, int l);

/// (d1+d2)(d1+d2-1)^(l-1): leading eigenvalue of the length-l
/// self-avoiding-walk matrix on tree-like neighborhoods. Exact.
int128 predicted_saw_eigenvalue1(int d1, int d2, int l);

/// {2*binom(d1+d2,d1)/2^(d1+d2),
///  2*binom(d1+d2,d1)*d1^d1*d2^d2/(d1+d2)^(d1+d2)},
/// evaluated in the log domain.
struct TvRates {
    double rate1;
    double rate2;
};
TvRates tv_rates(int d1, int d2);

} // namespace rsbm
