#include "repdim/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace repdim {

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json to_json(const SpectrumSummary& s) {
    ordered_json j;
    j["n"] = s.n;
    j["distinct"] = ordered_json::array();
    for (const auto& e : s.distinct) {
        ordered_json d;
        d["tau"] = round12(e.tau);
        d["mult"] = e.mult;
        d["beta"] = round12(e.beta);
        j["distinct"].push_back(d);
    }
    return j;
}

ordered_json to_json(const RepResult& r) {
    ordered_json j;
    j["rep"] = r.rep;
    j["case"] = to_string(r.rep_case);
    ordered_json c;
    c["side"] = to_string(r.certificate.side);
    c["branch"] = to_string(r.certificate.branch);
    if (r.certificate.b)
        c["b"] = round12(*r.certificate.b);
    else
        c["b"] = nullptr;
    c["m1p"] = r.certificate.m1p;
    c["m2p"] = r.certificate.m2p;
    c["m1p_bar"] = r.certificate.m1p_bar;
    c["m2p_bar"] = r.certificate.m2p_bar;
    j["certificate"] = c;
    return j;
}

ordered_json to_json(const Embedding& e) {
    ordered_json j;
    j["dim"] = e.dim();
    j["alpha"] = round12(e.alpha);
    j["beta"] = round12(e.beta);
    j["points"] = ordered_json::array();
    for (int i = 0; i < e.points.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < e.points.cols(); ++c) row.push_back(round12(e.points(i, c)));
        j["points"].push_back(row);
    }
    return j;
}

ordered_json to_json(const OracleReport& r) {
    ordered_json j;
    j["rep_oracle"] = r.rep_oracle;
    j["critical_only"] = r.critical_only;
    j["details"] = ordered_json::array();
    for (const auto& p : r.details) {
        ordered_json d;
        d["side"] = to_string(p.side);
        d["b"] = round12(p.b);
        d["critical"] = p.critical;
        d["is_edm"] = p.is_edm;
        d["dim"] = p.dim;
        j["details"].push_back(d);
    }
    return j;
}

ordered_json to_json(const VerifyReport& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["reasons"] = r.reasons;
    return j;
}

std::string embedding_to_csv(const Embedding& e) {
    std::string out;
    char buf[48];
    for (int i = 0; i < e.points.rows(); ++i) {
        for (int c = 0; c < e.points.cols(); ++c) {
            if (c) out.push_back(',');
            std::snprintf(buf, sizeof(buf), "%.12g", e.points(i, c));
            out += buf;
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace repdim
