#pragma once

#include <optional>

#include <Eigen/Dense>

#include "repdim/graph.hpp"
#include "repdim/repnum.hpp"
#include "repdim/spectral.hpp"

namespace repdim {

struct DistanceMatrixReport {
    bool is_edm = false;
    int embedding_dim = 0; // valid when is_edm
    double witness = 0.0;  // most positive eigenvalue of the projected matrix
};

struct Embedding {
    Eigen::MatrixXd points; // n x m, one point per row
    double alpha = 1.0;     // distance between adjacent vertices
    double beta = 0.0;      // distance between non-adjacent vertices
    double b = 0.0;         // beta^2 / alpha^2

    int dim() const { return static_cast<int>(points.cols()); }
};

// M = A + b*Abar: squared distance 1 on edges, b on non-edges.
Eigen::MatrixXd build_distance_matrix(const Graph& g, double b);

// Schoenberg: M is a distance matrix iff PMP is negative semidefinite,
// P = I - (1/n)J; the embedding dimension is rank(PMP).
DistanceMatrixReport schoenberg_test(const Eigen::MatrixXd& m, const ToleranceConfig& cfg = {});

// Gower: same verdict from F = (I - 1 v^T) M (I - v 1^T) for any v with v^T 1 = 1.
DistanceMatrixReport gower_test(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                                const ToleranceConfig& cfg = {});

// Coordinates from the factorization of -PMP/2; one point per row,
// column count = embedding dimension.
Eigen::MatrixXd realize(const Eigen::MatrixXd& m, const ToleranceConfig& cfg = {});

// tau_i / (tau_i + 1), the only b values that can beat dimension n-2.
double critical_b_tau1(const SpectrumSummary& s);
std::optional<double> critical_b_tau2(const SpectrumSummary& s);

// The b > 1 where the largest eigenvalue of M restricted to the hyperplane
// orthogonal to the all-ones vector crosses zero; there the matrix is a valid
// distance matrix of dimension <= n-2.
double boundary_b_bisection(const Graph& g, const ToleranceConfig& cfg = {});

// Minimum-dimension realization over all candidate b on the graph and its
// complement; the achieved dimension must equal representation_number.
std::pair<Embedding, RepResult> minimal_embedding(const Graph& g,
                                                  const ToleranceConfig& cfg = {});

// Tolerance rank of the centered point set (independent affine-rank guard).
int affine_rank(const Eigen::MatrixXd& points, const ToleranceConfig& cfg = {});

} // namespace repdim
