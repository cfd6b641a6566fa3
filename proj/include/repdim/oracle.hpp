#pragma once

#include <string>
#include <vector>

#include "repdim/embed.hpp"
#include "repdim/graph.hpp"
#include "repdim/spectral.hpp"

namespace repdim {

struct BProbe {
    Side side = Side::Graph;
    double b = 0.0;
    bool critical = false; // b of the form tau/(tau+1) or the boundary value
    bool is_edm = false;
    int dim = 0;
};

struct OracleReport {
    int rep_oracle = 0;
    bool critical_only = true; // no non-critical b beat dimension n-2
    std::vector<BProbe> details;
};

// Exhaustive b-scan: critical values, a dense grid, and the validity boundary,
// on both the graph and its complement. Shares no case logic with the theorem
// engine; only distance-matrix tests and raw spectra.
OracleReport brute_force_rep(const Graph& g, int grid_points = 1000,
                             const ToleranceConfig& cfg = {});

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> reasons;
    explicit operator bool() const { return ok; }
};

VerifyReport verify_embedding(const Graph& g, const Embedding& e,
                              const ToleranceConfig& cfg = {});

// Residual of the complement characteristic-polynomial identity, evaluated
// from the two spectrum summaries at the given sample points.
double complement_charpoly_residual(const SpectrumSummary& sg, const SpectrumSummary& sgbar,
                                    const std::vector<double>& sample_points);

// For a k-regular graph: complement spectrum must be {n-k-1} plus the negated,
// shifted remainder of the graph spectrum.
bool sachs_complement_check(const Graph& g, const ToleranceConfig& cfg = {});

} // namespace repdim
