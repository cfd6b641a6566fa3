#include <doctest.h>

#include <cmath>
#include <random>

#include "repdim/errors.hpp"
#include "repdim/graph.hpp"
#include "repdim/spectral.hpp"

using namespace repdim;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("eigendecompose small exact spectra") {
    auto k2 = eigendecompose(complete_graph(2).adjacency());
    CHECK(k2.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k2.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));

    // charpoly of C4 is x^2 (x^2 - 4)
    auto c4 = eigendecompose(cycle_graph(4).adjacency());
    std::vector<double> want{-2, 0, 0, 2};
    for (int i = 0; i < 4; ++i)
        CHECK(c4.eigenvalues(i) == doctest::Approx(want[static_cast<size_t>(i)]).epsilon(1e-10));

    auto pet = summarize(petersen_graph());
    REQUIRE(pet.count() == 3);
    CHECK(pet.tau(0) == doctest::Approx(-2.0));
    CHECK(pet.mult(0) == 4);
    CHECK(pet.tau(1) == doctest::Approx(1.0));
    CHECK(pet.mult(1) == 5);
    CHECK(pet.tau(2) == doctest::Approx(3.0));
    CHECK(pet.mult(2) == 1);
}

TEST_CASE("eigendecompose rejects non-symmetric input") {
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 0.5, 0;
    CHECK_THROWS_AS(eigendecompose(a), NumericError);
}

TEST_CASE("summary of the C6 complement") {
    auto s = summarize(complement(cycle_graph(6)));
    REQUIRE(s.count() == 4);
    CHECK(s.tau(0) == doctest::Approx(-2.0));
    CHECK(s.mult(0) == 2);
    CHECK(s.beta(0) == 0.0);
    CHECK(s.tau(1) == doctest::Approx(0.0));
    CHECK(s.mult(1) == 2);
    CHECK(s.tau(2) == doctest::Approx(1.0));
    CHECK(s.mult(2) == 1);
    CHECK(s.tau(3) == doctest::Approx(3.0));
    CHECK(s.mult(3) == 1);
}

TEST_CASE("summary of 2P3: smallest eigenspace not orthogonal to ones") {
    auto s = summarize(disjoint_union({path_graph(3), path_graph(3)}));
    REQUIRE(s.count() == 3);
    CHECK(s.tau(0) == doctest::Approx(-std::sqrt(2.0)));
    CHECK(s.mult(0) == 2);
    CHECK(s.beta(0) > 0.1);
    CHECK(s.tau(1) == doctest::Approx(0.0));
    CHECK(s.mult(1) == 2);
    CHECK(s.tau(2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(s.mult(2) == 2);
}

TEST_CASE("regular connected graphs: only the degree eigenvalue is main") {
    for (const Graph& g : {petersen_graph(), cycle_graph(7), complement(cycle_graph(6))}) {
        auto s = summarize(g);
        for (int i = 0; i < s.count() - 1; ++i) CHECK(s.beta(i) == 0.0);
        CHECK(s.beta(s.count() - 1) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s.tau(s.count() - 1) == doctest::Approx(static_cast<double>(*regularity(g))));
    }
}

TEST_CASE("summary invariants on random graphs") {
    std::mt19937 rng(23);
    ToleranceConfig cfg;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.5, rng);
        auto s = summarize(g);

        int mult_sum = 0;
        double beta2_sum = 0, trace = 0;
        for (const auto& e : s.distinct) {
            mult_sum += e.mult;
            beta2_sum += e.beta * e.beta;
            trace += e.mult * e.tau;
        }
        CHECK(mult_sum == n);
        CHECK(beta2_sum == doctest::Approx(1.0).epsilon(10 * cfg.tol_residual));
        CHECK(trace == doctest::Approx(0.0).epsilon(1e-9));

        // reconstruction: sum of lambda v v^T over all eigenpairs
        auto d = eigendecompose(g.adjacency());
        Eigen::MatrixXd rebuilt =
            d.eigenvectors * d.eigenvalues.asDiagonal() * d.eigenvectors.transpose();
        CHECK((rebuilt - g.adjacency()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("main angle extremal characterization over sampled eigenspace vectors") {
    // For each main eigenvalue, v^T v / (v^T 1)^2 over the eigenspace is minimized
    // by the projection of the ones vector, with minimum 1/(n beta^2).
    std::mt19937 rng(41);
    std::normal_distribution<double> gauss;
    for (const Graph& g :
         {path_graph(4), disjoint_union({path_graph(3), path_graph(3)}), random_graph(7, 0.5, rng)}) {
        auto d = eigendecompose(g.adjacency());
        auto s = summarize(g);
        int n = g.n();
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

        int col = 0;
        for (const auto& e : s.distinct) {
            if (e.beta > 0) {
                double bound = 1.0 / (n * e.beta * e.beta);
                Eigen::MatrixXd basis = d.eigenvectors.middleCols(col, e.mult);
                double best = std::numeric_limits<double>::infinity();
                for (int trial = 0; trial < 200; ++trial) {
                    Eigen::VectorXd coeff(e.mult);
                    for (int i = 0; i < e.mult; ++i) coeff(i) = gauss(rng);
                    Eigen::VectorXd v = basis * coeff;
                    double dot = v.dot(ones);
                    if (std::abs(dot) < 1e-9) continue;
                    best = std::min(best, v.squaredNorm() / (dot * dot));
                }
                CHECK(best >= bound - 1e-9);
                // the minimizer: projection of ones onto the eigenspace
                Eigen::VectorXd proj = basis * (basis.transpose() * ones);
                double dot = proj.dot(ones);
                CHECK(proj.squaredNorm() / (dot * dot) == doctest::Approx(bound).epsilon(1e-9));
            }
            col += e.mult;
        }
    }
}
