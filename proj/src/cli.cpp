#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entmono/bipartite.hpp"
#include "entmono/errors.hpp"
#include "entmono/locc_fuzz.hpp"
#include "entmono/spinchain.hpp"
#include "entmono/state_io.hpp"
#include "entmono/tripartite.hpp"

namespace {

using namespace entmono;

// ===== flag value parsing =====

double number_at(const std::string& s, std::size_t pos) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw UsageError("bad number in '" + s + "'");
    return v;
}

BipartiteFrame parse_bipartite_frame(const std::string& s) {
    if (s == "raw") return BipartiteFrame::raw();
    if (s == "bell") return BipartiteFrame::bell();
    if (s.rfind("maxd:", 0) == 0) {
        double v = number_at(s, 5);
        int d = static_cast<int>(v);
        if (v != d || d < 2) throw UsageError("maxd frame needs an integer dimension >= 2");
        return BipartiteFrame::max_d(d);
    }
    if (s.rfind("custom:", 0) == 0) return BipartiteFrame::custom(number_at(s, 7));
    throw UsageError("unknown frame '" + s + "' (raw|bell|maxd:<D>|custom:<N>)");
}

TripartiteFrame parse_tripartite_frame(const std::string& s) {
    if (s == "raw") return TripartiteFrame::raw();
    if (s == "max" || s == "maxtripartite") return TripartiteFrame::max_tripartite();
    if (s.rfind("custom:", 0) == 0) return TripartiteFrame::custom(number_at(s, 7));
    throw UsageError("unknown frame '" + s + "' (raw|max|custom:<N>)");
}

FuzzShape parse_shape(const std::string& s) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (true) {
        std::size_t nx = s.find('x', pos);
        std::string tok = s.substr(pos, nx == std::string::npos ? std::string::npos : nx - pos);
        const char* begin = tok.c_str();
        char* end = nullptr;
        long v = std::strtol(begin, &end, 10);
        if (end == begin || *end != '\0' || v < 1 || v > 1 << 20)
            throw UsageError("bad dimension '" + tok + "' in shape '" + s + "'");
        dims.push_back(static_cast<int>(v));
        if (nx == std::string::npos) break;
        pos = nx + 1;
    }
    if (dims.size() == 2) return FuzzShape::bipartite(dims[0], dims[1]);
    if (dims.size() == 3) {
        if (dims[0] != 2 || dims[1] != 2)
            throw UsageError("tripartite shapes must be 2x2x<n>, got '" + s + "'");
        return FuzzShape::tripartite_c(dims[2]);
    }
    throw UsageError("shape must be <n1>x<n2> or 2x2x<n>, got '" + s + "'");
}

std::vector<Party> parse_parties(const std::string& s) {
    if (s.empty()) throw UsageError("--parties needs at least one of A, B, C");
    std::vector<Party> out;
    for (char c : s) {
        switch (c) {
            case 'A': out.push_back(Party::A); break;
            case 'B': out.push_back(Party::B); break;
            case 'C': out.push_back(Party::C); break;
            default: throw UsageError(std::string("unknown party '") + c + "' in --parties");
        }
    }
    return out;
}

void print_value(double v) { std::printf("{\"value\": %s}\n", fmt12(v).c_str()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement monotones for bipartite and 2x2xn tripartite pure states"};
    app.require_subcommand(1);

    std::string b_state, b_frame = "raw";
    CLI::App* bip = app.add_subcommand("bipartite", "bipartite monotone of a pure state");
    bip->add_option("--state", b_state, "JSON file: amplitude matrix, rows = first party")
        ->required();
    bip->add_option("--frame", b_frame, "raw|bell|maxd:<D>|custom:<N> (default raw)");

    std::string t_state, t_frame = "raw";
    CLI::App* trip = app.add_subcommand("tripartite", "tripartite monotone of a 2x2xn pure state");
    trip->add_option("--state", t_state, "JSON file: [2][2][n] amplitude tensor")->required();
    trip->add_option("--frame", t_frame, "raw|max|custom:<N> (default raw)");

    std::string c_state;
    CLI::App* conc = app.add_subcommand("concurrence", "concurrence of a two-qubit density matrix");
    conc->add_option("--state", c_state, "JSON file: 4x4 density matrix")->required();

    std::string g_state;
    CLI::App* tang = app.add_subcommand("tangle", "residual tangle of a three-qubit pure state");
    tang->add_option("--state", g_state, "JSON file: [2][2][2] amplitude tensor")->required();

    double s_lmin = 0.5, s_lmax = 2.5;
    int s_steps = 2001;
    std::string s_frame = "raw", s_out, s_svg;
    CLI::App* chain = app.add_subcommand("spinchain", "sweep the transverse-field chain");
    chain->add_option("--lambda-min", s_lmin, "lower end of the coupling range (default 0.5)");
    chain->add_option("--lambda-max", s_lmax, "upper end of the coupling range (default 2.5)");
    chain->add_option("--steps", s_steps, "grid points, at least 3 (default 2001)");
    chain->add_option("--frame", s_frame, "tripartite frame for E (default raw)");
    chain->add_option("--out", s_out, "write the scan as CSV to this path");
    chain->add_option("--svg", s_svg, "render the scan as SVG to this path");

    std::uint64_t f_trials = 1000;
    RngSeed f_seed = 0;
    std::string f_shape = "2x2", f_parties, f_frame = "raw", f_report;
    double f_tol = 1e-9, f_bias = 0.0;
    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized LOCC monotonicity campaign");
    fuzz->add_option("--trials", f_trials, "number of random trials (default 1000)");
    fuzz->add_option("--seed", f_seed, "campaign seed (default 0)");
    fuzz->add_option("--shape", f_shape, "<n1>x<n2> or 2x2x<n> (default 2x2)");
    fuzz->add_option("--parties", f_parties, "measured parties, e.g. AB or ABC (default all)");
    fuzz->add_option("--frame", f_frame, "frame for the shape's measure (default raw)");
    fuzz->add_option("--tolerance", f_tol, "max allowed violation (default 1e-9)");
    fuzz->add_option("--report", f_report, "write the full report JSON to this path");
    fuzz->add_option("--branch-bias", f_bias,
                     "testing hook: add this to every trial's branch average");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (bip->parsed()) {
            BipartitePureState s = parse_bipartite_state(load_json_file(b_state));
            print_value(bipartite_e(s, parse_bipartite_frame(b_frame)));
            return 0;
        }
        if (trip->parsed()) {
            TripartitePureState s = parse_tripartite_state(load_json_file(t_state));
            print_value(tripartite_e(s, parse_tripartite_frame(t_frame)));
            return 0;
        }
        if (conc->parsed()) {
            print_value(concurrence(parse_density_matrix(load_json_file(c_state))));
            return 0;
        }
        if (tang->parsed()) {
            print_value(tangle(parse_tripartite_state(load_json_file(g_state))));
            return 0;
        }
        if (chain->parsed()) {
            if (!(s_lmin > 0.0 && s_lmin < s_lmax))
                throw UsageError("need 0 < --lambda-min < --lambda-max");
            if (s_steps < 3) throw UsageError("--steps must be at least 3");
            TripartiteFrame f = parse_tripartite_frame(s_frame);
            std::vector<ScanRecord> recs = scan(s_lmin, s_lmax, s_steps, f);
            std::vector<KinkReport> kinks;
            if (recs.size() >= 5) {
                kinks = detect_kinks(recs, Measure::E);
                std::vector<KinkReport> ck = detect_kinks(recs, Measure::C);
                kinks.insert(kinks.end(), ck.begin(), ck.end());
            }
            if (!s_out.empty()) {
                std::ostringstream os;
                write_csv(os, recs);
                write_file_atomic(s_out, os.str());
            }
            if (!s_svg.empty()) write_file_atomic(s_svg, render_svg(recs, kinks));
            Json summary{{"rows", recs.size()}, {"kinks", kinks_to_json(kinks)}};
            std::printf("%s\n", summary.dump().c_str());
            return 0;
        }
        // require_subcommand(1) leaves only fuzz.
        FuzzConfig cfg;
        cfg.trials = f_trials;
        cfg.seed = f_seed;
        cfg.shape = parse_shape(f_shape);
        if (f_parties.empty())
            cfg.parties = cfg.shape.tripartite
                              ? std::vector<Party>{Party::A, Party::B, Party::C}
                              : std::vector<Party>{Party::A, Party::B};
        else
            cfg.parties = parse_parties(f_parties);
        if (cfg.shape.tripartite)
            cfg.tripartite_frame = parse_tripartite_frame(f_frame);
        else
            cfg.bipartite_frame = parse_bipartite_frame(f_frame);
        cfg.tolerance = f_tol;
        cfg.branch_bias = f_bias;
        FuzzReport rep = run_campaign(cfg);
        Json j = fuzz_report_to_json(rep);
        std::printf("%s\n", j.dump(2).c_str());
        if (!f_report.empty()) write_file_atomic(f_report, j.dump(2) + "\n");
        return rep.passed ? 0 : 3;
    } catch (const NumericalFailureError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InvalidInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
