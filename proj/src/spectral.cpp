#include "repdim/spectral.hpp"

#include <cmath>
#include <limits>

#include "repdim/errors.hpp"

namespace repdim {

double SpectrumSummary::min_gap() const {
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < distinct.size(); ++i)
        gap = std::min(gap, distinct[i].tau - distinct[i - 1].tau);
    return gap;
}

EigenDecomposition eigendecompose(const Eigen::MatrixXd& a, const ToleranceConfig& cfg) {
    if (a.rows() != a.cols())
        throw NumericError("eigendecompose: matrix is not square");
    const int n = static_cast<int>(a.rows());
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > cfg.tol_residual * scale)
        throw NumericError("eigendecompose: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw NumericError("eigendecompose: eigensolver failed to converge");

    EigenDecomposition d{solver.eigenvalues(), solver.eigenvectors()};

    double rho = std::max(std::abs(d.eigenvalues(0)), std::abs(d.eigenvalues(n - 1)));
    double tol = cfg.tol_residual * std::max(1.0, rho);
    double resid = (a * d.eigenvectors - d.eigenvectors * d.eigenvalues.asDiagonal())
                       .cwiseAbs()
                       .maxCoeff();
    if (resid > tol * n)
        throw NumericError("eigendecompose: residual check failed");
    double ortho = (d.eigenvectors.transpose() * d.eigenvectors -
                    Eigen::MatrixXd::Identity(n, n))
                       .cwiseAbs()
                       .maxCoeff();
    if (ortho > cfg.tol_residual * n * 100)
        throw NumericError("eigendecompose: eigenvectors not orthonormal");
    return d;
}

SpectrumSummary summarize_matrix(const Eigen::MatrixXd& a, const ToleranceConfig& cfg) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) throw std::invalid_argument("summarize: empty matrix");
    auto d = eigendecompose(a, cfg);

    double rho = std::max(std::abs(d.eigenvalues(0)), std::abs(d.eigenvalues(n - 1)));
    double gap_tol = cfg.tol_group * std::max(1.0, rho);

    SpectrumSummary s;
    s.n = n;
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || d.eigenvalues(i) - d.eigenvalues(i - 1) > gap_tol) {
            DistinctEigenvalue e;
            e.mult = i - start;
            e.tau = d.eigenvalues.segment(start, e.mult).mean();
            double proj2 = 0.0; // ||P_i 1||^2
            for (int j = start; j < i; ++j) {
                double dot = d.eigenvectors.col(j).dot(ones);
                proj2 += dot * dot;
            }
            e.beta = std::sqrt(proj2 / n);
            if (e.beta < cfg.tol_zero_angle) e.beta = 0.0;
            s.distinct.push_back(e);
            start = i;
        }
    }
    return s;
}

SpectrumSummary summarize(const Graph& g, const ToleranceConfig& cfg) {
    if (g.n() < 1) throw std::invalid_argument("summarize: empty graph");
    return summarize_matrix(g.adjacency(), cfg);
}

} // namespace repdim
