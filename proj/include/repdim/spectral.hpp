#pragma once

#include <vector>

#include <Eigen/Dense>

#include "repdim/graph.hpp"

namespace repdim {

struct ToleranceConfig {
    double tol_residual = 1e-11;  // eigenpair residual, relative to max(1, spectral radius)
    double tol_group = 1e-7;      // eigenvalue gap clustering, relative to max(1, spectral radius)
    double tol_zero_angle = 1e-7; // main angles below this snap to 0
    double tol_psd = 1e-9;        // negative-semidefiniteness slack
    double tol_rank = 1e-8;       // rank threshold, relative to largest |eigenvalue|
    double tol_equality = 1e-8;   // equality detection in the tau2 condition
    double tol_bisect = 1e-12;    // boundary bisection target
};

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXd eigenvectors; // columns, orthonormal, paired with eigenvalues
};

// One distinct eigenvalue with its multiplicity and main angle.
struct DistinctEigenvalue {
    double tau = 0.0;
    int mult = 0;
    double beta = 0.0; // main angle, in [0,1]
};

struct SpectrumSummary {
    int n = 0;
    std::vector<DistinctEigenvalue> distinct; // tau strictly ascending

    double tau(int i) const { return distinct[i].tau; }   // i-th smallest, 0-based
    int mult(int i) const { return distinct[i].mult; }
    double beta(int i) const { return distinct[i].beta; }
    int count() const { return static_cast<int>(distinct.size()); }

    // smallest gap between consecutive distinct eigenvalues (diagnostic)
    double min_gap() const;
};

EigenDecomposition eigendecompose(const Eigen::MatrixXd& a, const ToleranceConfig& cfg = {});

SpectrumSummary summarize(const Graph& g, const ToleranceConfig& cfg = {});
SpectrumSummary summarize_matrix(const Eigen::MatrixXd& a, const ToleranceConfig& cfg = {});

} // namespace repdim
