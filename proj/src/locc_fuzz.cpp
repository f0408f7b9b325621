#include "entmono/locc_fuzz.hpp"

#include <algorithm>
#include <cmath>

#include "entmono/parallel.hpp"

namespace entmono {

FuzzShape FuzzShape::bipartite(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw InvalidParameterError("FuzzShape::bipartite: dims must be >= 1");
    FuzzShape s;
    s.tripartite = false;
    s.n1 = n1;
    s.n2 = n2;
    return s;
}

FuzzShape FuzzShape::tripartite_c(int n) {
    if (n < 1) throw InvalidParameterError("FuzzShape::tripartite_c: n must be >= 1");
    FuzzShape s;
    s.tripartite = true;
    s.n = n;
    return s;
}

int FuzzShape::party_dim(Party p) const {
    if (tripartite) return p == Party::C ? n : 2;
    switch (p) {
        case Party::A: return n1;
        case Party::B: return n2;
        default:
            throw InvalidParameterError("party_dim: bipartite shapes have no party C");
    }
}

namespace {

constexpr double kBranchFloor = 1e-14;

void require_povm_dim(const PovmPair& p, int need, const char* who) {
    if (p.a1.rows() != need || p.a1.cols() != need || p.a2.rows() != need ||
        p.a2.cols() != need)
        throw DimensionMismatchError(std::string(who) + ": POVM is " +
                                     std::to_string(p.a1.rows()) + "x" +
                                     std::to_string(p.a1.cols()) + ", party dim " +
                                     std::to_string(need));
}

}  // namespace

std::vector<std::pair<double, TripartitePureState>> apply_povm_tripartite(
    const TripartitePureState& s, const PovmPair& p, Party party) {
    int need = party == Party::C ? s.n() : 2;
    require_povm_dim(p, need, "apply_povm_tripartite");

    static const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    std::vector<std::pair<double, TripartitePureState>> branches;
    for (const ComplexMatrix* a : {&p.a1, &p.a2}) {
        ComplexMatrix theta;
        switch (party) {
            case Party::A: theta = kron(*a, id2) * s.amps; break;
            case Party::B: theta = kron(id2, *a) * s.amps; break;
            case Party::C: theta = s.amps * a->transpose(); break;
        }
        double prob = theta.squaredNorm();
        if (prob < kBranchFloor) continue;
        branches.emplace_back(prob, TripartitePureState{theta / std::sqrt(prob)});
    }
    return branches;
}

TrialOutcome monotonicity_trial(const BipartitePureState& s, const PovmPair& p, Party party,
                                const BipartiteFrame& f) {
    PovmAverage r = average_e_after_povm(s, p, party, f);
    return {r.before, r.avg};
}

TrialOutcome monotonicity_trial(const TripartitePureState& s, const PovmPair& p, Party party,
                                const TripartiteFrame& f) {
    double before = tripartite_e(s, f);
    double avg = 0;
    for (const auto& [prob, branch] : apply_povm_tripartite(s, p, party))
        avg += prob * tripartite_e(branch, f);
    return {before, avg};
}

namespace {

// Draw order per trial is fixed (state, party, POVM) so a trial is fully
// determined by (seed, index) and the worst one can be replayed afterwards.
FuzzWitness run_trial(const FuzzConfig& cfg, std::uint64_t index) {
    Rng rng = Rng::stream(cfg.seed, index);
    FuzzWitness w;
    w.tripartite = cfg.shape.tripartite;
    w.trial = index;
    if (cfg.shape.tripartite) {
        TripartitePureState s = random_tripartite_state(cfg.shape.n, rng);
        w.party = cfg.parties[rng.uniform_below(cfg.parties.size())];
        w.povm = random_povm_pair(cfg.shape.party_dim(w.party), rng);
        TrialOutcome out = monotonicity_trial(s, w.povm, w.party, cfg.tripartite_frame);
        w.state = s.amps;
        w.before = out.before;
        w.avg = out.avg + cfg.branch_bias;
    } else {
        BipartitePureState s = random_bipartite_state(cfg.shape.n1, cfg.shape.n2, rng);
        w.party = cfg.parties[rng.uniform_below(cfg.parties.size())];
        w.povm = random_povm_pair(cfg.shape.party_dim(w.party), rng);
        TrialOutcome out = monotonicity_trial(s, w.povm, w.party, cfg.bipartite_frame);
        w.state = s.psi;
        w.before = out.before;
        w.avg = out.avg + cfg.branch_bias;
    }
    return w;
}

}  // namespace

FuzzReport run_campaign(const FuzzConfig& cfg) {
    if (cfg.trials < 1) throw InvalidParameterError("run_campaign: trials must be >= 1");
    if (cfg.parties.empty()) throw InvalidParameterError("run_campaign: no parties selected");
    if (!cfg.shape.tripartite)
        for (Party p : cfg.parties)
            if (p == Party::C)
                throw InvalidParameterError("run_campaign: party C needs a tripartite shape");
    if (!(cfg.tolerance >= 0)) throw InvalidParameterError("run_campaign: negative tolerance");

    // Violations land in per-trial slots, so the scan below is independent
    // of how trials were scheduled across threads.
    std::vector<double> violation(cfg.trials);
    parallel_chunks(cfg.trials, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            FuzzWitness w = run_trial(cfg, t);
            violation[t] = w.avg - w.before;
        }
    });

    std::uint64_t worst_index = 0;
    for (std::uint64_t t = 1; t < cfg.trials; ++t)
        if (violation[t] > violation[worst_index]) worst_index = t;

    FuzzReport report;
    report.trials_run = cfg.trials;
    report.max_violation = violation[worst_index];
    report.passed = report.max_violation <= cfg.tolerance;
    report.worst = run_trial(cfg, worst_index);
    return report;
}

}  // namespace entmono
