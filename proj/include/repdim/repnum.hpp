#pragma once

#include <optional>
#include <string>

#include "repdim/graph.hpp"
#include "repdim/spectral.hpp"

namespace repdim {

enum class RepCase { Complete, Empty, CliqueUnion, CliqueUnionComplement, Spectral };
enum class Side { Graph, Complement };
enum class Branch { Tau1, Tau2, Fallback };

enum class Tau2Verdict { NotApplicable, StrictInequality, Equality, Violated };

struct Certificate {
    Side side = Side::Graph;
    Branch branch = Branch::Fallback;
    std::optional<double> b;
    int m1p = 0, m2p = 0, m1p_bar = 0, m2p_bar = 0;
};

struct RepResult {
    int rep = 0;
    RepCase rep_case = RepCase::Spectral;
    Certificate certificate;
};

std::string to_string(RepCase c);
std::string to_string(Side s);
std::string to_string(Branch b);
std::string to_string(Tau2Verdict v);

// Adjusted multiplicity of the smallest eigenvalue: m1+1 when its eigenspace
// is orthogonal to the all-ones vector, m1 otherwise.
int m1_prime(const SpectrumSummary& s);

// Decides whether b = tau2/(tau2+1) yields a distance matrix, and whether the
// defining inequality is strict or tight.
Tau2Verdict tau2_condition(const SpectrumSummary& s, const ToleranceConfig& cfg = {});

// 0 when the tau2 branch does not apply, m2+1 on strict inequality, m2+2 on equality.
int m2_prime(const SpectrumSummary& s, const ToleranceConfig& cfg = {});

// The full case analysis: complete/empty, clique unions, then the spectral formula
// over the graph and its complement.
RepResult representation_number(const Graph& g, const ToleranceConfig& cfg = {});

// Multiplicity-only shortcut, valid for regular graphs that are not a disjoint
// union of equal cliques or its complement.
int representation_number_regular(const Graph& g, const ToleranceConfig& cfg = {});

// Closed form from strongly-regular parameters (n,k,lambda,mu).
int srg_rep(int n, int k, int lambda, int mu, double tol = 1e-6);

struct LineGraphBound {
    int bound = 0;  // n - 1 - r, r = bipartite component count
    bool tight = false;
};

LineGraphBound line_graph_bound(const Graph& g);

} // namespace repdim
