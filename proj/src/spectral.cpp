#include "rsbm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rsbm/errors.hpp"
#include "rsbm/rng.hpp"

namespace rsbm {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void orthogonalize(std::vector<double>& x, const std::vector<std::vector<double>>& basis) {
    // two Gram-Schmidt sweeps
    for (int sweep = 0; sweep < 2; ++sweep) {
        for (const auto& b : basis) {
            const double c = dot(x, b);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * b[i];
        }
    }
}

void normalize(std::vector<double>& x) {
    const double nrm = norm(x);
    if (nrm > 0.0)
        for (auto& v : x) v /= nrm;
}

std::vector<double> random_unit(int dim, Rng& rng, const std::vector<std::vector<double>>& basis) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (int tries = 0; tries < 16; ++tries) {
        for (auto& v : x) v = rng.symmetric_unit();
        orthogonalize(x, basis);
        if (norm(x) > 1e-8) break;
    }
    normalize(x);
    return x;
}

struct IterateOutcome {
    EigenPair pair;
    bool converged = false;
};

// Power iteration on sign*M + cI restricted to the complement of `basis`.
// Reports the eigenvalue of M itself. Residual is measured in the deflated
// space: || P(Mx) - lambda x ||_2 with P the projector onto the complement.
IterateOutcome power_iterate(const LinearOperator& op, int sign,
                             const std::vector<std::vector<double>>& basis, const SolveOptions& opts,
                             Rng& rng, long iter_budget) {
    const double shift = op.norm_bound;
    std::vector<double> x = random_unit(op.dim, rng, basis);
    std::vector<double> y(static_cast<std::size_t>(op.dim));

    IterateOutcome out;
    double best_residual = std::numeric_limits<double>::infinity();
    double window_residual = std::numeric_limits<double>::infinity();
    int restarts = 0;
    constexpr long kWindow = 1000;

    for (long iter = 1; iter <= iter_budget; ++iter) {
        op.apply(x.data(), y.data());
        if (sign < 0)
            for (auto& v : y) v = -v;
        orthogonalize(y, basis);
        const double rayleigh = dot(x, y); // Rayleigh quotient of sign*M
        double res_sq = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double r = y[i] - rayleigh * x[i];
            res_sq += r * r;
        }
        const double residual = std::sqrt(res_sq);
        if (residual < best_residual) {
            best_residual = residual;
            out.pair.value = sign * rayleigh;
            out.pair.vector = x;
            out.pair.residual = residual;
            out.pair.iterations = iter;
        }
        if (residual <= opts.tolerance) {
            out.converged = true;
            return out;
        }
        // restart from a fresh vector when the residual plateaus (start
        // vector nearly orthogonal to the dominant space)
        if (iter % kWindow == 0) {
            if (residual > 0.9 * window_residual && restarts < 3) {
                ++restarts;
                x = random_unit(op.dim, rng, basis);
                window_residual = std::numeric_limits<double>::infinity();
                continue;
            }
            window_residual = residual;
        }
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift * x[i];
        x.swap(y);
        orthogonalize(x, basis);
        normalize(x);
    }
    return out;
}

} // namespace

LinearOperator adjacency_operator(const Graph& g) {
    LinearOperator op;
    op.dim = g.num_vertices();
    int max_deg = 0;
    for (int v = 0; v < g.num_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
    op.norm_bound = static_cast<double>(max_deg);
    op.entrywise_nonnegative = true;
    op.apply = [&g](const double* x, double* y) {
        const int n = g.num_vertices();
#pragma omp parallel for schedule(static)
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int w : g.neighbors(v)) s += x[w];
            y[v] = s;
        }
    };
    return op;
}

std::vector<double> matvec(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.num_vertices())
        throw ValidationError("matvec: vector length " + std::to_string(x.size()) + " != " +
                              std::to_string(g.num_vertices()) + " vertices");
    std::vector<double> y(x.size());
    const int n = g.num_vertices();
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
        double s = 0.0;
        for (int w : g.neighbors(v)) s += x[w];
        y[v] = s;
    }
    return y;
}

std::vector<double> matvec_serial(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.num_vertices())
        throw ValidationError("matvec: vector length mismatch");
    std::vector<double> y(x.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        double s = 0.0;
        for (int w : g.neighbors(v)) s += x[w];
        y[v] = s;
    }
    return y;
}

bool SpectrumSummary::has_degenerate_pair(double tol) const {
    for (std::size_t i = 0; i + 1 < eigenvalues.size(); ++i)
        if (std::abs(eigenvalues[i] - eigenvalues[i + 1]) <= tol) return true;
    return false;
}

SpectrumSummary top_eigenpairs(const LinearOperator& op, int k, const SolveOptions& opts) {
    if (k < 1 || k > op.dim) throw ValidationError("top_eigenpairs: k must be in [1, dim]");
    SpectrumSummary sum;
    sum.tolerance = opts.tolerance;
    sum.seed = opts.seed;

    Rng rng_pos = Rng::stream(opts.seed, 101);
    Rng rng_neg = Rng::stream(opts.seed, 202);

    for (int round = 0; round < k; ++round) {
        IterateOutcome pos = power_iterate(op, +1, sum.eigenvectors, opts, rng_pos, opts.max_iter);
        IterateOutcome chosen = pos;
        if (round > 0 || !op.entrywise_nonnegative) {
            IterateOutcome neg = power_iterate(op, -1, sum.eigenvectors, opts, rng_neg, opts.max_iter);
            const bool neg_wins = std::abs(neg.pair.value) > std::abs(pos.pair.value);
            if (neg_wins) chosen = neg;
            if (!neg.converged && !neg_wins)
                sum.notes.push_back("pair " + std::to_string(round + 1) +
                                    ": negative-side probe unconverged (best residual " +
                                    std::to_string(neg.pair.residual) + "); ordering uses its estimate");
        }
        if (!chosen.converged)
            throw ConvergenceError("power iteration did not reach tolerance for pair " +
                                       std::to_string(round + 1),
                                   chosen.pair.residual);
        sum.eigenvalues.push_back(chosen.pair.value);
        sum.eigenvectors.push_back(std::move(chosen.pair.vector));
        sum.residuals.push_back(chosen.pair.residual);
        sum.iterations.push_back(chosen.pair.iterations);
    }
    return sum;
}

SpectrumSummary top_eigenpairs(const Graph& g, int k, const SolveOptions& opts) {
    LinearOperator op = adjacency_operator(g);
    const auto d = g.regular_degree();
    if (!d || g.num_vertices() == 0) return top_eigenpairs(op, k, opts);

    // Regular graph: lambda1 = d with the constant eigenvector, supplied
    // analytically and verified against one matvec.
    if (k < 1 || k > op.dim) throw ValidationError("top_eigenpairs: k must be in [1, dim]");
    SpectrumSummary sum;
    sum.tolerance = opts.tolerance;
    sum.seed = opts.seed;
    sum.analytic_first = true;

    const int n = g.num_vertices();
    std::vector<double> ones(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> image(static_cast<std::size_t>(n));
    op.apply(ones.data(), image.data());
    double res_sq = 0.0;
    for (int v = 0; v < n; ++v) {
        const double r = image[v] - static_cast<double>(*d) * ones[v];
        res_sq += r * r;
    }
    sum.eigenvalues.push_back(static_cast<double>(*d));
    sum.eigenvectors.push_back(std::move(ones));
    sum.residuals.push_back(std::sqrt(res_sq));
    sum.iterations.push_back(0);

    Rng rng_pos = Rng::stream(opts.seed, 101);
    Rng rng_neg = Rng::stream(opts.seed, 202);
    for (int round = 1; round < k; ++round) {
        IterateOutcome pos = power_iterate(op, +1, sum.eigenvectors, opts, rng_pos, opts.max_iter);
        IterateOutcome neg = power_iterate(op, -1, sum.eigenvectors, opts, rng_neg, opts.max_iter);
        const bool neg_wins = std::abs(neg.pair.value) > std::abs(pos.pair.value);
        IterateOutcome chosen = neg_wins ? neg : pos;
        if (!neg.converged && !neg_wins)
            sum.notes.push_back("pair " + std::to_string(round + 1) +
                                ": negative-side probe unconverged (best residual " +
                                std::to_string(neg.pair.residual) + "); ordering uses its estimate");
        if (!chosen.converged)
            throw ConvergenceError("power iteration did not reach tolerance for pair " +
                                       std::to_string(round + 1),
                                   chosen.pair.residual);
        sum.eigenvalues.push_back(chosen.pair.value);
        sum.eigenvectors.push_back(std::move(chosen.pair.vector));
        sum.residuals.push_back(chosen.pair.residual);
        sum.iterations.push_back(chosen.pair.iterations);
    }

    if (k >= 2) {
        // gamma uses the second-largest eigenvalue by value; when the
        // magnitude-ordered second pair is negative it is not that quantity,
        // so recompute in the complement of e.
        double lambda2_value = sum.eigenvalues[1];
        if (lambda2_value < 0.0) {
            EigenPair by_value = second_eigenvector(g, opts);
            lambda2_value = by_value.value;
        }
        sum.gamma = 1.0 - lambda2_value / static_cast<double>(*d);
    }
    return sum;
}

EigenPair dominant_in_complement(const LinearOperator& op,
                                 const std::vector<std::vector<double>>& deflate,
                                 const SolveOptions& opts) {
    Rng rng = Rng::stream(opts.seed, 101);
    IterateOutcome out = power_iterate(op, +1, deflate, opts, rng, opts.max_iter);
    if (!out.converged)
        throw ConvergenceError("power iteration did not reach tolerance", out.pair.residual);
    return out.pair;
}

EigenPair second_eigenvector(const Graph& g, const SolveOptions& opts) {
    const auto d = g.regular_degree();
    if (!d) throw ValidationError("second_eigenvector requires a regular graph");
    LinearOperator op = adjacency_operator(g);
    const int n = g.num_vertices();
    std::vector<std::vector<double>> deflate{
        std::vector<double>(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)))};
    return dominant_in_complement(op, deflate, opts);
}

} // namespace rsbm
