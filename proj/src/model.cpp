#include "rsbm/model.hpp"

#include <cmath>
#include <string>

#include "rsbm/errors.hpp"

namespace rsbm {

std::vector<std::string> RsbmParams::violations() const {
    std::vector<std::string> out;
    if (n <= 0) out.push_back("n must be positive");
    if (d1 < 1) out.push_back("d1 >= 1 required");
    if (d2 < 1) out.push_back("d2 >= 1 required");
    if (n > 0 && d1 > 0 && (static_cast<long long>(n) * d1) % 2 != 0)
        out.push_back("n*d1 must be even");
    if (d1 >= n) out.push_back("d1 < n required");
    if (d2 > n) out.push_back("d2 <= n required");
    return out;
}

std::vector<std::string> RsbmParams::advisories() const {
    std::vector<std::string> out;
    if (d1 < 3 || d2 < 3)
        out.push_back("min{d1,d2} >= 3 assumed by the connectivity and recovery guarantees");
    return out;
}

void RsbmParams::validate() const {
    auto v = violations();
    if (!v.empty())
        throw ValidationError("invalid parameters (n=" + std::to_string(n) + ", d1=" + std::to_string(d1) +
                              ", d2=" + std::to_string(d2) + "): " + v.front());
}

static void require_degrees(int d1, int d2) {
    if (d1 < 1) throw ValidationError("d1 >= 1 required");
    if (d2 < 1) throw ValidationError("d2 >= 1 required");
}

DerivedQuantities check_thresholds(int d1, int d2) {
    require_degrees(d1, d2);
    DerivedQuantities q;
    q.d1 = d1;
    q.d2 = d2;
    const double diff = d1 - d2;
    const double disc = diff * diff - 4.0 * (d1 + d2 - 1);
    q.spectral_condition = disc > 0.0;
    q.majority_condition = d1 > d2 + 4;
    q.roots_real = q.spectral_condition;
    if (q.roots_real) {
        const double s = std::sqrt(disc);
        q.alpha = (diff + s) / 2.0;
        q.beta = (diff - s) / 2.0;
        // solve [alpha beta; alpha^2 beta^2] [A B]' = [z1 z2]'
        const double z1 = diff;
        const double z2 = diff * diff - (d1 + d2);
        q.coeff_a = (z2 - q.beta * z1) / (q.alpha * (q.alpha - q.beta));
        q.coeff_b = (q.alpha * z1 - z2) / (q.beta * (q.alpha - q.beta));
    }
    const TvRates rates = tv_rates(d1, d2);
    q.tv_rate1 = rates.rate1;
    q.tv_rate2 = rates.rate2;
    return q;
}

std::vector<int128> z_sequence(int d1, int d2, int l) {
    require_degrees(d1, d2);
    if (l < 1) throw ValidationError("z_sequence requires l >= 1");
    std::vector<int128> z;
    z.reserve(static_cast<std::size_t>(l));
    const int128 diff = d1 - d2;
    const int128 damp = d1 + d2 - 1;
    z.push_back(diff);
    if (l >= 2) z.push_back(checked_sub(checked_mul(diff, diff), int128{d1} + d2));
    // The recurrence is valid from k = 3 on; z_1, z_2 come from the seeds
    // above (there is no z_0 consistent with the k = 2 step).
    for (int k = 3; k <= l; ++k)
        z.push_back(checked_sub(checked_mul(diff, z[k - 2]), checked_mul(damp, z[k - 3])));
    return z;
}

int128 predicted_saw_eigenvalue1(int d1, int d2, int l) {
    require_degrees(d1, d2);
    if (l < 1) throw ValidationError("predicted_saw_eigenvalue1 requires l >= 1");
    int128 v = d1 + d2;
    for (int i = 1; i < l; ++i) v = checked_mul(v, int128{d1} + d2 - 1);
    return v;
}

TvRates tv_rates(int d1, int d2) {
    require_degrees(d1, d2);
    const double d = d1 + d2;
    const double log_binom = std::lgamma(d + 1.0) - std::lgamma(d1 + 1.0) - std::lgamma(d2 + 1.0);
    const double log2v = std::log(2.0);
    const double log_rate1 = log2v + log_binom - d * log2v;
    const double log_rate2 = log2v + log_binom + d1 * std::log(static_cast<double>(d1)) +
                             d2 * std::log(static_cast<double>(d2)) - d * std::log(d);
    return {std::exp(log_rate1), std::exp(log_rate2)};
}

} // namespace rsbm
