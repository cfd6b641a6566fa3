#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "repdim/embed.hpp"
#include "repdim/errors.hpp"
#include "repdim/graph.hpp"
#include "repdim/json_io.hpp"
#include "repdim/oracle.hpp"
#include "repdim/repnum.hpp"
#include "repdim/spectral.hpp"

namespace {

using repdim::ordered_json;

enum class Command { Repnum, Embed, Spectrum, Verify, Oracle };

struct Options {
    std::string input_path;
    std::string inline_str;
    std::string format = "auto";
    std::string out = "json";
    std::string coords_path;
    int grid = 1000;
    repdim::ToleranceConfig cfg;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

std::string read_input(const Options& opt) {
    if (!opt.inline_str.empty()) return opt.inline_str;
    if (!opt.input_path.empty() && opt.input_path != "-") {
        std::ifstream f(opt.input_path);
        if (!f) throw repdim::ParseError("cannot open input file: " + opt.input_path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
    // a leading all-digit line is a vertex count; graph6 never starts with a digit
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        return !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
    }
    return false;
}

Eigen::MatrixXd read_coords_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw repdim::ParseError("cannot open coordinate file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw repdim::ParseError("coordinates: bad number on line " +
                                         std::to_string(lineno));
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw repdim::ParseError("coordinates: ragged row on line " + std::to_string(lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw repdim::ParseError("coordinates: empty file");
    Eigen::MatrixXd pts(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.front().size(); ++j)
            pts(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return pts;
}

ordered_json run_one(Command cmd, const repdim::Graph& g, const Options& opt) {
    using namespace repdim;
    switch (cmd) {
        case Command::Repnum:
            return to_json(representation_number(g, opt.cfg));
        case Command::Embed: {
            auto [emb, rr] = minimal_embedding(g, opt.cfg);
            ordered_json j = to_json(rr);
            j["embedding"] = to_json(emb);
            return j;
        }
        case Command::Spectrum: {
            auto s = summarize(g, opt.cfg);
            ordered_json j = to_json(s);
            double gap = s.min_gap();
            j["min_gap"] = std::isfinite(gap) ? ordered_json(round12(gap)) : ordered_json(nullptr);
            return j;
        }
        case Command::Oracle:
            return to_json(brute_force_rep(g, opt.grid, opt.cfg));
        case Command::Verify: {
            Eigen::MatrixXd pts = read_coords_csv(opt.coords_path);
            if (pts.rows() != g.n())
                throw ParseError("coordinates: row count does not match vertex count");
            // infer the two distances from the graph structure
            double asum = 0, bsum = 0;
            int acnt = 0, bcnt = 0;
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v) {
                    double d = (pts.row(u) - pts.row(v)).norm();
                    if (g.adjacent(u, v)) {
                        asum += d;
                        ++acnt;
                    } else {
                        bsum += d;
                        ++bcnt;
                    }
                }
            Embedding e;
            e.points = pts;
            e.alpha = acnt ? asum / acnt : 2.0 * (bcnt ? bsum / bcnt : 1.0);
            e.beta = bcnt ? bsum / bcnt : 2.0 * e.alpha;
            e.b = (e.beta * e.beta) / (e.alpha * e.alpha);
            auto v = verify_embedding(g, e, opt.cfg);
            ordered_json j = to_json(v);
            j["dim"] = e.dim();
            j["alpha"] = round12(e.alpha);
            j["beta"] = round12(e.beta);
            return j;
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_text(Command cmd, const ordered_json& j) {
    std::ostringstream out;
    switch (cmd) {
        case Command::Repnum:
            out << "rep " << j["rep"].get<int>() << " (" << j["case"].get<std::string>()
                << ", branch " << j["certificate"]["branch"].get<std::string>() << ")";
            break;
        case Command::Embed:
            out << "rep " << j["rep"].get<int>() << ", " << j["embedding"]["points"].size()
                << " points in dimension " << j["embedding"]["dim"].get<int>();
            break;
        case Command::Spectrum:
            for (const auto& d : j["distinct"])
                out << "tau " << d["tau"].dump() << " mult " << d["mult"].get<int>() << " beta "
                    << d["beta"].dump() << "\n";
            out << "min_gap " << j["min_gap"].dump();
            break;
        case Command::Oracle:
            out << "rep_oracle " << j["rep_oracle"].get<int>() << ", critical_only "
                << (j["critical_only"].get<bool>() ? "yes" : "no");
            break;
        case Command::Verify:
            out << (j["ok"].get<bool>() ? "PASS" : "FAIL");
            for (const auto& r : j["reasons"]) out << "\n  " << r.get<std::string>();
            break;
    }
    return out.str();
}

int run(Command cmd, const Options& opt) {
    std::string text;
    try {
        text = read_input(opt);
    } catch (const repdim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        std::cerr << "error: empty input; pass --inline STR or --input PATH or pipe to stdin\n";
        return kExitUsage;
    }
    if (cmd == Command::Verify && opt.coords_path.empty()) {
        std::cerr << "error: verify requires --coords PATH\n";
        return kExitUsage;
    }

    bool edgelist = opt.format == "edgelist" ||
                    (opt.format == "auto" && looks_like_edge_list(text));

    auto emit = [&](const ordered_json& j) {
        if (opt.out == "json") {
            std::cout << j.dump() << "\n";
        } else if (opt.out == "text") {
            std::cout << render_text(cmd, j) << "\n";
        } else { // csv
            if (cmd == Command::Embed) {
                for (const auto& row : j["embedding"]["points"]) {
                    for (size_t c = 0; c < row.size(); ++c)
                        std::cout << (c ? "," : "") << row[c].dump();
                    std::cout << "\n";
                }
            } else if (cmd == Command::Spectrum) {
                for (const auto& d : j["distinct"])
                    std::cout << d["tau"].dump() << "," << d["mult"].dump() << ","
                              << d["beta"].dump() << "\n";
            } else {
                throw repdim::ParseError("csv output is only available for embed and spectrum");
            }
        }
    };

    if (edgelist) {
        try {
            emit(run_one(cmd, repdim::parse_edge_list(text), opt));
        } catch (const repdim::ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitParse;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitNumeric;
        }
        return kExitOk;
    }

    // graph6: one graph per line, one record per line
    std::istringstream in(text);
    std::string line;
    bool single = !opt.inline_str.empty();
    int exit_code = kExitOk;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string g6 = line.substr(b, e - b + 1);
        try {
            emit(run_one(cmd, repdim::parse_graph6(g6), opt));
        } catch (const std::exception& e) {
            if (single) {
                std::cerr << "error: " << e.what() << "\n";
                if (dynamic_cast<const repdim::ParseError*>(&e)) return kExitParse;
                if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitUsage;
                return kExitNumeric;
            }
            ordered_json err;
            err["error"] = e.what();
            err["input"] = g6;
            std::cout << err.dump() << "\n";
        }
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euclidean representation numbers and two-distance embeddings of graphs"};
    app.require_subcommand(1);

    Options opt;
    Command cmd = Command::Repnum;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", opt.input_path, "input file (default: stdin)");
        sub->add_option("--inline", opt.inline_str, "inline graph6 string");
        sub->add_option("--format", opt.format, "graph6|edgelist|auto")
            ->check(CLI::IsMember({"graph6", "edgelist", "auto"}));
        sub->add_option("--out", opt.out, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--tol-group", opt.cfg.tol_group, "eigenvalue grouping tolerance");
        sub->add_option("--tol-equality", opt.cfg.tol_equality, "equality-detection tolerance");
    };

    auto* repnum = app.add_subcommand("repnum", "compute the representation number");
    auto* embed = app.add_subcommand("embed", "construct a minimal two-distance embedding");
    auto* spectrum = app.add_subcommand("spectrum", "distinct eigenvalues, multiplicities, main angles");
    auto* verify = app.add_subcommand("verify", "check coordinates against a graph");
    auto* oracle = app.add_subcommand("oracle", "brute-force b-scan cross-check");
    for (auto* sub : {repnum, embed, spectrum, verify, oracle}) add_common(sub);
    oracle->add_option("--grid", opt.grid, "number of grid points in the b-scan");
    verify->add_option("--coords", opt.coords_path, "CSV coordinate file, one point per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (repnum->parsed()) cmd = Command::Repnum;
    else if (embed->parsed()) cmd = Command::Embed;
    else if (spectrum->parsed()) cmd = Command::Spectrum;
    else if (verify->parsed()) cmd = Command::Verify;
    else if (oracle->parsed()) cmd = Command::Oracle;

    return run(cmd, opt);
}
