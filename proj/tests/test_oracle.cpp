#include <doctest.h>

#include <cmath>
#include <random>

#include "repdim/errors.hpp"
#include "repdim/graph.hpp"
#include "repdim/oracle.hpp"
#include "repdim/repnum.hpp"

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

Embedding unit_square() {
    Embedding e;
    e.points.resize(4, 2);
    e.points << 0, 0, 1, 0, 1, 1, 0, 1;
    e.alpha = 1.0;
    e.beta = std::sqrt(2.0);
    e.b = 2.0;
    return e;
}

} // namespace

TEST_CASE("brute force representation number") {
    auto p3 = brute_force_rep(path_graph(3), 200);
    CHECK(p3.rep_oracle == 1);
    CHECK(p3.critical_only);

    auto c4 = brute_force_rep(cycle_graph(4), 200);
    CHECK(c4.rep_oracle == 2);
    CHECK(c4.critical_only);

    CHECK_THROWS_AS(brute_force_rep(complete_graph(4), 200), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_rep(path_graph(3), 50), std::invalid_argument);
}

TEST_CASE("oracle agrees with the theorem engine on random graphs") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        if (is_complete(g) || is_empty(g)) continue;
        auto report = brute_force_rep(g, 150);
        CHECK(report.rep_oracle == representation_number(g).rep);
        CHECK(report.critical_only);
    }
}

TEST_CASE("verify_embedding") {
    CHECK(verify_embedding(cycle_graph(4), unit_square()).ok);

    auto bad = verify_embedding(path_graph(4), unit_square());
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.reasons.empty());

    // claimed dimension must match the affine rank
    Embedding padded = unit_square();
    padded.points.conservativeResize(4, 3);
    padded.points.col(2).setZero();
    CHECK_FALSE(verify_embedding(cycle_graph(4), padded).ok);

    // octahedron coordinates realize the C6 complement
    Embedding oct;
    oct.points.resize(6, 3);
    double h = 1.0 / std::sqrt(2.0);
    oct.points << h, 0, 0, -h, 0, 0, 0, h, 0, 0, -h, 0, 0, 0, h, 0, 0, -h;
    oct.alpha = 1.0;
    oct.beta = std::sqrt(2.0);
    oct.b = 2.0;
    Graph g(6);
    // non-edges are the three antipodal pairs
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2)) g.add_edge(i, j);
    CHECK(verify_embedding(g, oct).ok);
}

TEST_CASE("complement characteristic polynomial identity") {
    std::vector<double> samples = {0.3, 5.0, -0.4};

    auto c6 = summarize(cycle_graph(6));
    auto c6b = summarize(complement(cycle_graph(6)));
    CHECK(complement_charpoly_residual(c6, c6b, samples) < 1e-8);
    // and in the other direction
    CHECK(complement_charpoly_residual(c6b, c6, samples) < 1e-8);

    auto pet = summarize(petersen_graph());
    auto petb = summarize(complement(petersen_graph()));
    CHECK(complement_charpoly_residual(pet, petb, samples) < 1e-8);

    // a corrupted main angle is detected
    auto corrupted = pet;
    corrupted.distinct[0].beta += 0.1;
    CHECK(complement_charpoly_residual(corrupted, petb, samples) > 1e-3);

    // samples at a pole are rejected: x = -1 - tau with tau = -2
    CHECK_THROWS_AS(complement_charpoly_residual(pet, petb, {1.0}), std::invalid_argument);
}

TEST_CASE("Sachs complement spectrum for regular graphs") {
    CHECK(sachs_complement_check(cycle_graph(5)));
    CHECK(sachs_complement_check(petersen_graph()));
    CHECK(sachs_complement_check(complete_graph(4)));
    CHECK(sachs_complement_check(disjoint_union({cycle_graph(4), cycle_graph(4)})));
    CHECK_THROWS_AS(sachs_complement_check(path_graph(4)), std::invalid_argument);
}
