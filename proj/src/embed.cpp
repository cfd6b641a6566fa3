#include "repdim/embed.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "repdim/errors.hpp"

namespace repdim {

namespace {

bool below_minus_one(double tau) { return tau < -1.0 - 1e-9; }

void validate_predistance(const Eigen::MatrixXd& m, const ToleranceConfig& cfg) {
    const int n = static_cast<int>(m.rows());
    if (n == 0 || m.cols() != n)
        throw std::invalid_argument("distance matrix must be square and non-empty");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > cfg.tol_residual * scale)
        throw std::invalid_argument("distance matrix must be symmetric");
    for (int i = 0; i < n; ++i) {
        if (std::abs(m(i, i)) > cfg.tol_residual * scale)
            throw std::invalid_argument("distance matrix must have zero diagonal");
        for (int j = 0; j < n; ++j)
            if (i != j && m(i, j) < 0)
                throw std::invalid_argument("distance matrix must be non-negative");
    }
}

DistanceMatrixReport report_from_projected(const Eigen::MatrixXd& f, const ToleranceConfig& cfg) {
    auto d = eigendecompose(f, cfg);
    const int n = static_cast<int>(f.rows());
    DistanceMatrixReport rep;
    rep.witness = d.eigenvalues(n - 1);
    rep.is_edm = rep.witness <= cfg.tol_psd;
    double max_abs = d.eigenvalues.cwiseAbs().maxCoeff();
    double thresh = cfg.tol_rank * max_abs;
    rep.embedding_dim = 0;
    for (int i = 0; i < n; ++i)
        if (std::abs(d.eigenvalues(i)) > thresh) ++rep.embedding_dim;
    return rep;
}

Eigen::MatrixXd center_projected(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) -
                        Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    return p * m * p;
}

// Orthonormal basis of the hyperplane orthogonal to the all-ones vector.
Eigen::MatrixXd ones_perp_basis(int n) {
    Eigen::MatrixXd b(n, n);
    b.col(0) = Eigen::VectorXd::Ones(n);
    b.rightCols(n - 1) = Eigen::MatrixXd::Identity(n, n).rightCols(n - 1);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
    Eigen::MatrixXd q = qr.householderQ();
    return q.rightCols(n - 1);
}

} // namespace

Eigen::MatrixXd build_distance_matrix(const Graph& g, double b) {
    if (b <= 0) throw std::invalid_argument("build_distance_matrix: b must be positive");
    const int n = g.n();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = i == j ? 0.0 : (g.adjacent(i, j) ? 1.0 : b);
    return m;
}

DistanceMatrixReport schoenberg_test(const Eigen::MatrixXd& m, const ToleranceConfig& cfg) {
    validate_predistance(m, cfg);
    return report_from_projected(center_projected(m), cfg);
}

DistanceMatrixReport gower_test(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                                const ToleranceConfig& cfg) {
    validate_predistance(m, cfg);
    const int n = static_cast<int>(m.rows());
    if (v.size() != n || std::abs(v.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("gower_test: v must satisfy v^T 1 = 1");
    Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n, n) -
                           Eigen::VectorXd::Ones(n) * v.transpose();
    Eigen::MatrixXd f = left * m * left.transpose();
    f = 0.5 * (f + f.transpose());
    return report_from_projected(f, cfg);
}

int affine_rank(const Eigen::MatrixXd& points, const ToleranceConfig& cfg) {
    const int n = static_cast<int>(points.rows());
    if (n == 0) return 0;
    Eigen::MatrixXd centered = points.rowwise() - points.colwise().mean();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
    auto sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    // singular values scale as sqrt of Gram eigenvalues
    double thresh = std::sqrt(cfg.tol_rank) * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    return rank;
}

Eigen::MatrixXd realize(const Eigen::MatrixXd& m, const ToleranceConfig& cfg) {
    auto rep = schoenberg_test(m, cfg);
    if (!rep.is_edm)
        throw NumericError("realize: not a Euclidean distance matrix");
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd gram = -0.5 * center_projected(m);
    auto d = eigendecompose(gram, cfg);
    double max_abs = d.eigenvalues.cwiseAbs().maxCoeff();
    double thresh = cfg.tol_rank * max_abs;

    std::vector<int> keep; // descending eigenvalue order
    for (int i = n - 1; i >= 0; --i)
        if (d.eigenvalues(i) > thresh) keep.push_back(i);

    Eigen::MatrixXd pts(n, static_cast<int>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
        pts.col(static_cast<int>(c)) =
            d.eigenvectors.col(keep[c]) * std::sqrt(d.eigenvalues(keep[c]));

    // round-trip guard: squared pairwise distances must reproduce M
    double dist_tol = 10.0 * cfg.tol_rank * std::max(1.0, max_abs);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d2 = (pts.row(i) - pts.row(j)).squaredNorm();
            if (std::abs(d2 - m(i, j)) > dist_tol)
                throw InconsistencyError("realize: coordinates do not reproduce the distance matrix");
        }
    if (affine_rank(pts, cfg) != static_cast<int>(keep.size()))
        throw InconsistencyError("realize: affine rank disagrees with eigenvalue count");
    return pts;
}

double critical_b_tau1(const SpectrumSummary& s) {
    double tau1 = s.tau(0);
    if (!below_minus_one(tau1))
        throw std::invalid_argument(
            "critical_b_tau1: smallest eigenvalue >= -1 (disjoint union of cliques)");
    return tau1 / (tau1 + 1.0);
}

std::optional<double> critical_b_tau2(const SpectrumSummary& s) {
    if (s.count() < 2 || !below_minus_one(s.tau(1))) return std::nullopt;
    return s.tau(1) / (s.tau(1) + 1.0);
}

double boundary_b_bisection(const Graph& g, const ToleranceConfig& cfg) {
    const int n = g.n();
    if (n < 2 || is_complete(g) || is_empty(g))
        throw std::invalid_argument("boundary_b_bisection: graph must have an edge and a non-edge");

    Eigen::MatrixXd q = ones_perp_basis(n);
    auto top_eig = [&](double b) {
        Eigen::MatrixXd f = q.transpose() * build_distance_matrix(g, b) * q;
        f = 0.5 * (f + f.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(f, Eigen::EigenvaluesOnly);
        return solver.eigenvalues()(n - 2);
    };

    double lo = 1.0 + 1e-9;
    if (top_eig(lo) > 0)
        throw NumericError("boundary_b_bisection: no valid bracket near b = 1");
    double hi = 2.0;
    while (top_eig(hi) <= 0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9)
            throw NumericError("boundary_b_bisection: no sign change found (no boundary in b)");
    }
    while (hi - lo > cfg.tol_bisect * std::max(1.0, lo)) {
        double mid = 0.5 * (lo + hi);
        if (top_eig(mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

namespace {

struct Candidate {
    int dim = 0;
    Side side = Side::Graph;
    Branch branch = Branch::Fallback;
    double b = 0.0;
    Eigen::MatrixXd m;
};

int branch_order(Branch b) {
    switch (b) {
        case Branch::Tau1: return 0;
        case Branch::Tau2: return 1;
        case Branch::Fallback: return 2;
    }
    return 3;
}

bool better(const Candidate& a, const Candidate& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.branch != b.branch) return branch_order(a.branch) < branch_order(b.branch);
    return a.side == Side::Graph && b.side == Side::Complement;
}

} // namespace

std::pair<Embedding, RepResult> minimal_embedding(const Graph& g, const ToleranceConfig& cfg) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("minimal_embedding: n >= 2 required");
    RepResult rr = representation_number(g, cfg);

    Embedding emb;
    if (is_complete(g) || is_empty(g)) {
        // regular simplex; the second distance never occurs
        Eigen::MatrixXd m =
            Eigen::MatrixXd::Constant(n, n, 1.0) - Eigen::MatrixXd::Identity(n, n);
        emb.points = realize(m, cfg);
        if (is_complete(g)) {
            emb.alpha = 1.0;
            emb.beta = 2.0;
            emb.b = 4.0;
        } else {
            emb.beta = 1.0;
            emb.alpha = 2.0;
            emb.b = 0.25;
        }
    } else {
        Graph gbar = complement(g);
        std::vector<Candidate> cands;
        for (Side side : {Side::Graph, Side::Complement}) {
            const Graph& h = side == Side::Graph ? g : gbar;
            SpectrumSummary s = summarize(h, cfg);

            auto consider = [&](Branch branch, double b) {
                Candidate c{0, side, branch, b, build_distance_matrix(h, b)};
                auto rep = schoenberg_test(c.m, cfg);
                if (!rep.is_edm) return;
                c.dim = rep.embedding_dim;
                cands.push_back(std::move(c));
            };

            if (below_minus_one(s.tau(0))) consider(Branch::Tau1, critical_b_tau1(s));
            auto verdict = tau2_condition(s, cfg);
            if (verdict == Tau2Verdict::StrictInequality || verdict == Tau2Verdict::Equality)
                if (auto b2 = critical_b_tau2(s)) consider(Branch::Tau2, *b2);
            try {
                consider(Branch::Fallback, boundary_b_bisection(h, cfg));
            } catch (const NumericError&) {
                // no boundary on this side; the other side provides one
            }
        }
        if (cands.empty())
            throw InconsistencyError("minimal_embedding: no candidate distance matrix found");
        const Candidate* best = &cands.front();
        for (const auto& c : cands)
            if (better(c, *best)) best = &c;

        emb.points = realize(best->m, cfg);
        if (best->side == Side::Graph) {
            emb.alpha = 1.0;
            emb.beta = std::sqrt(best->b);
            emb.b = best->b;
        } else {
            // complement-side solution: rescale so edges of g sit at distance 1
            emb.points /= std::sqrt(best->b);
            emb.alpha = 1.0;
            emb.beta = 1.0 / std::sqrt(best->b);
            emb.b = 1.0 / best->b;
        }
        rr.certificate.side = best->side;
        rr.certificate.branch = best->branch;
        rr.certificate.b = best->b;
    }

    if (emb.dim() != rr.rep)
        throw InconsistencyError("minimal_embedding: realized dimension " +
                                 std::to_string(emb.dim()) + " != theorem value " +
                                 std::to_string(rr.rep));
    return {std::move(emb), std::move(rr)};
}

} // namespace repdim
