#include "repdim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "repdim/errors.hpp"

namespace repdim {

OracleReport brute_force_rep(const Graph& g, int grid_points, const ToleranceConfig& cfg) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("brute_force_rep: n >= 3 required");
    if (is_complete(g) || is_empty(g))
        throw std::invalid_argument("brute_force_rep: graph must have an edge and a non-edge");
    if (grid_points < 100)
        throw std::invalid_argument("brute_force_rep: grid_points >= 100 required");

    OracleReport report;
    int best = std::numeric_limits<int>::max();
    Graph gbar = complement(g);

    for (Side side : {Side::Graph, Side::Complement}) {
        const Graph& h = side == Side::Graph ? g : gbar;
        SpectrumSummary s = summarize(h, cfg);

        auto probe = [&](double b, bool critical) {
            BProbe p{side, b, critical, false, 0};
            auto rep = schoenberg_test(build_distance_matrix(h, b), cfg);
            p.is_edm = rep.is_edm;
            p.dim = rep.embedding_dim;
            if (p.is_edm) {
                best = std::min(best, p.dim);
                if (!critical && p.dim < n - 2) report.critical_only = false;
            }
            report.details.push_back(p);
        };

        // every tau/(tau+1) with tau < -1, not just the first two
        double b_max = 4.0;
        for (int i = 0; i < s.count(); ++i) {
            double tau = s.tau(i);
            if (tau < -1.0 - 1e-9) {
                double b = tau / (tau + 1.0);
                probe(b, true);
                if (i == 1) b_max = std::max(b_max, 2.0 * b);
            }
        }
        double step = (b_max - 1.0) / grid_points;
        for (int j = 1; j <= grid_points; ++j) probe(1.0 + j * step, false);
        try {
            probe(boundary_b_bisection(h, cfg), true);
        } catch (const NumericError&) {
            // no validity boundary on this side
        }
    }
    if (best == std::numeric_limits<int>::max())
        throw InconsistencyError("brute_force_rep: no valid distance matrix found");
    report.rep_oracle = best;
    return report;
}

VerifyReport verify_embedding(const Graph& g, const Embedding& e, const ToleranceConfig& cfg) {
    VerifyReport rep;
    rep.ok = true;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.reasons.push_back(std::move(why));
    };

    const int n = g.n();
    if (e.points.rows() != n) {
        fail("point count " + std::to_string(e.points.rows()) + " != vertex count " +
             std::to_string(n));
        return rep;
    }
    double tol = cfg.tol_equality * std::max({1.0, e.alpha, e.beta});
    if (e.alpha <= 0 || e.beta <= 0) fail("distances must be positive");
    if (std::abs(e.alpha - e.beta) <= tol) fail("alpha and beta must differ");

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double d = (e.points.row(u) - e.points.row(v)).norm();
            double want = g.adjacent(u, v) ? e.alpha : e.beta;
            if (std::abs(d - want) > tol)
                fail("pair (" + std::to_string(u) + "," + std::to_string(v) + ") at distance " +
                     std::to_string(d) + ", expected " + std::to_string(want));
        }

    int ar = affine_rank(e.points, cfg);
    if (ar != e.dim())
        fail("affine rank " + std::to_string(ar) + " != claimed dimension " +
             std::to_string(e.dim()));
    return rep;
}

double complement_charpoly_residual(const SpectrumSummary& sg, const SpectrumSummary& sgbar,
                                    const std::vector<double>& sample_points) {
    if (sg.n != sgbar.n)
        throw std::invalid_argument("complement_charpoly_residual: vertex counts differ");
    const int n = sg.n;
    double worst = 0.0;
    for (double x : sample_points) {
        for (int i = 0; i < sg.count(); ++i)
            if (std::abs(x + 1.0 + sg.tau(i)) < 1e-3)
                throw std::invalid_argument(
                    "complement_charpoly_residual: sample point too close to a pole");

        double lhs = 1.0;
        for (int i = 0; i < sgbar.count(); ++i)
            lhs *= std::pow(x - sgbar.tau(i), sgbar.mult(i));

        double prod = (n % 2 == 0) ? 1.0 : -1.0;
        double sum = 0.0;
        for (int i = 0; i < sg.count(); ++i) {
            prod *= std::pow(-x - 1.0 - sg.tau(i), sg.mult(i));
            sum += sg.beta(i) * sg.beta(i) / (x + 1.0 + sg.tau(i));
        }
        double rhs = prod * (1.0 - n * sum);

        double resid = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
        worst = std::max(worst, resid);
    }
    return worst;
}

bool sachs_complement_check(const Graph& g, const ToleranceConfig& cfg) {
    auto k = regularity(g);
    if (!k) throw std::invalid_argument("sachs_complement_check: graph is not regular");
    const int n = g.n();

    Eigen::VectorXd lam = eigendecompose(g.adjacency(), cfg).eigenvalues; // ascending
    std::vector<double> expected;
    expected.push_back(n - *k - 1.0);
    for (int i = 0; i < n - 1; ++i) expected.push_back(-lam(i) - 1.0); // drop one copy of k
    std::sort(expected.begin(), expected.end());

    Eigen::VectorXd bar = eigendecompose(complement(g).adjacency(), cfg).eigenvalues;
    double tol = 1e-8 * std::max(1.0, static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        if (std::abs(bar(i) - expected[static_cast<size_t>(i)]) > tol) return false;
    return true;
}

} // namespace repdim
