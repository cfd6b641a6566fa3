#include "repdim/repnum.hpp"

#include <cmath>

#include "repdim/errors.hpp"

namespace repdim {

std::string to_string(RepCase c) {
    switch (c) {
        case RepCase::Complete: return "complete";
        case RepCase::Empty: return "empty";
        case RepCase::CliqueUnion: return "clique_union";
        case RepCase::CliqueUnionComplement: return "clique_union_complement";
        case RepCase::Spectral: return "spectral";
    }
    return "?";
}

std::string to_string(Side s) {
    return s == Side::Graph ? "graph" : "complement";
}

std::string to_string(Branch b) {
    switch (b) {
        case Branch::Tau1: return "tau1";
        case Branch::Tau2: return "tau2";
        case Branch::Fallback: return "fallback";
    }
    return "?";
}

std::string to_string(Tau2Verdict v) {
    switch (v) {
        case Tau2Verdict::NotApplicable: return "not_applicable";
        case Tau2Verdict::StrictInequality: return "strict_inequality";
        case Tau2Verdict::Equality: return "equality";
        case Tau2Verdict::Violated: return "violated";
    }
    return "?";
}

namespace {

// "tau < -1" with slack matching the eigenvalue grouping resolution.
bool below_minus_one(double tau, const ToleranceConfig& cfg) {
    return tau < -1.0 - cfg.tol_group;
}

} // namespace

int m1_prime(const SpectrumSummary& s) {
    return s.beta(0) == 0.0 ? s.mult(0) + 1 : s.mult(0);
}

Tau2Verdict tau2_condition(const SpectrumSummary& s, const ToleranceConfig& cfg) {
    if (s.count() < 2) return Tau2Verdict::NotApplicable;
    if (!below_minus_one(s.tau(1), cfg)) return Tau2Verdict::NotApplicable;
    if (s.mult(0) != 1 || s.beta(1) != 0.0) return Tau2Verdict::NotApplicable;

    double lhs = s.beta(0) * s.beta(0) / (s.tau(1) - s.tau(0));
    double rhs = 0.0;
    for (int i = 2; i < s.count(); ++i)
        rhs += s.beta(i) * s.beta(i) / (s.tau(i) - s.tau(1));

    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::abs(lhs - rhs) <= cfg.tol_equality * scale) return Tau2Verdict::Equality;
    return lhs > rhs ? Tau2Verdict::StrictInequality : Tau2Verdict::Violated;
}

int m2_prime(const SpectrumSummary& s, const ToleranceConfig& cfg) {
    switch (tau2_condition(s, cfg)) {
        case Tau2Verdict::Equality: return s.mult(1) + 2;
        case Tau2Verdict::StrictInequality: return s.mult(1) + 1;
        default: return 0;
    }
}

RepResult representation_number(const Graph& g, const ToleranceConfig& cfg) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("representation_number: n >= 1 required");

    RepResult res;
    if (is_complete(g)) { // includes n = 1
        res.rep = n - 1;
        res.rep_case = RepCase::Complete;
        return res;
    }
    if (is_empty(g)) {
        res.rep = n - 1;
        res.rep_case = RepCase::Empty;
        res.certificate.side = Side::Complement;
        return res;
    }

    if (auto cu = classify_clique_union(g)) {
        res.rep = n - std::max(cu->r, 2);
        res.rep_case = RepCase::CliqueUnion;
        res.certificate.side = Side::Complement; // realized via the complement (Tau1 when r >= 2)
        res.certificate.branch = cu->r >= 2 ? Branch::Tau1 : Branch::Fallback;
        return res;
    }
    Graph gbar = complement(g);
    if (auto cu = classify_clique_union(gbar)) {
        res.rep = n - std::max(cu->r, 2);
        res.rep_case = RepCase::CliqueUnionComplement;
        res.certificate.side = Side::Graph;
        res.certificate.branch = cu->r >= 2 ? Branch::Tau1 : Branch::Fallback;
        return res;
    }

    SpectrumSummary sg = summarize(g, cfg);
    SpectrumSummary sh = summarize(gbar, cfg);
    Certificate& c = res.certificate;
    c.m1p = m1_prime(sg);
    c.m2p = m2_prime(sg, cfg);
    c.m1p_bar = m1_prime(sh);
    c.m2p_bar = m2_prime(sh, cfg);

    int best = std::max({c.m1p, c.m2p, c.m1p_bar, c.m2p_bar, 2});
    res.rep = n - best;
    res.rep_case = RepCase::Spectral;

    // deterministic tie-break: tau1 before tau2 before fallback, graph before complement
    if (c.m1p == best) {
        c.side = Side::Graph;
        c.branch = Branch::Tau1;
        c.b = sg.tau(0) / (sg.tau(0) + 1.0);
    } else if (c.m1p_bar == best) {
        c.side = Side::Complement;
        c.branch = Branch::Tau1;
        c.b = sh.tau(0) / (sh.tau(0) + 1.0);
    } else if (c.m2p == best) {
        c.side = Side::Graph;
        c.branch = Branch::Tau2;
        c.b = sg.tau(1) / (sg.tau(1) + 1.0);
    } else if (c.m2p_bar == best) {
        c.side = Side::Complement;
        c.branch = Branch::Tau2;
        c.b = sh.tau(1) / (sh.tau(1) + 1.0);
    } else {
        c.side = Side::Graph;
        c.branch = Branch::Fallback;
    }
    return res;
}

int representation_number_regular(const Graph& g, const ToleranceConfig& cfg) {
    if (!regularity(g))
        throw std::invalid_argument("representation_number_regular: graph is not regular");
    const int n = g.n();
    SpectrumSummary s = summarize(g, cfg);
    if (s.count() < 2)
        throw std::invalid_argument("representation_number_regular: complete or empty graph");
    int m1 = s.mult(0);
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        int m_second_largest = s.mult(s.count() - 2);
        return n - 1 - std::max(m1, m_second_largest);
    }
    int r = static_cast<int>(comps.size());
    return n - 1 - std::max(m1, r - 1);
}

int srg_rep(int n, int k, int lambda, int mu, double tol) {
    double disc = static_cast<double>(mu - lambda) * (mu - lambda) + 4.0 * (k - mu);
    if (disc <= 0)
        throw NumericError("srg_rep: infeasible parameters (non-positive discriminant)");
    double num = std::abs(static_cast<double>(n - 1) * (mu - lambda) - 2.0 * k);
    double val = 0.5 * ((n - 1) - num / std::sqrt(disc));
    double rounded = std::round(val);
    if (std::abs(val - rounded) > tol)
        throw NumericError("srg_rep: infeasible parameters (non-integral multiplicity)");
    return static_cast<int>(rounded);
}

LineGraphBound line_graph_bound(const Graph& g) {
    int e = g.edge_count();
    if (e < 1) throw std::invalid_argument("line_graph_bound: input has no edges");
    int r = bipartite_component_count(g);
    LineGraphBound b;
    b.bound = g.n() - 1 - r;
    b.tight = e >= 2 * (g.n() - r);
    return b;
}

} // namespace repdim
