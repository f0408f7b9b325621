#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entmono/bipartite.hpp"
#include "entmono/tripartite.hpp"

namespace entmono {

// State shape for a fuzz campaign: either an n1 x n2 bipartite system or a
// 2 x 2 x n tripartite one.
struct FuzzShape {
    bool tripartite = false;
    int n1 = 2, n2 = 2;  // bipartite dims
    int n = 2;           // third-party dim

    static FuzzShape bipartite(int n1, int n2);
    static FuzzShape tripartite_c(int n);

    int party_dim(Party p) const;
};

struct FuzzConfig {
    std::uint64_t trials = 1;
    RngSeed seed = 0;
    FuzzShape shape;
    std::vector<Party> parties;  // nonempty; C only for tripartite shapes
    BipartiteFrame bipartite_frame = BipartiteFrame::raw();
    TripartiteFrame tripartite_frame = TripartiteFrame::raw();
    double tolerance = 1e-9;
    // Test hook: added to every branch entanglement, shifting each trial's
    // average by exactly this amount. Nonzero values force violations.
    double branch_bias = 0.0;
};

// The (state, POVM, party) of the worst trial, kept so a reported violation
// is replayable from the report alone. `state` uses the same amplitude
// layout as the state types (n1 x n2, or 4 x n with row index 2i+j).
struct FuzzWitness {
    bool tripartite = false;
    ComplexMatrix state;
    PovmPair povm;
    Party party = Party::A;
    double before = 0;
    double avg = 0;
    std::uint64_t trial = 0;
};

struct FuzzReport {
    std::uint64_t trials_run = 0;
    // max over trials of (avg - before); negative while the monotone holds
    // strictly on every sampled trial.
    double max_violation = 0;
    bool passed = false;  // max_violation <= tolerance
    FuzzWitness worst;
};

// The two measurement branches (p_i, normalized post-state) of a two-outcome
// POVM on one party. POVM dimension must be 2 for A/B and n for C. Branch
// probabilities sum to 1; branches below p = 1e-14 are dropped.
std::vector<std::pair<double, TripartitePureState>> apply_povm_tripartite(
    const TripartitePureState& s, const PovmPair& p, Party party);

struct TrialOutcome {
    double before;
    double avg;
};

// before = E(s); avg = sum_i p_i E(branch_i). A monotone never increases on
// average under local measurement, so avg <= before for every POVM and party.
TrialOutcome monotonicity_trial(const BipartitePureState& s, const PovmPair& p,
                                Party party, const BipartiteFrame& f);
TrialOutcome monotonicity_trial(const TripartitePureState& s, const PovmPair& p,
                                Party party, const TripartiteFrame& f);

// Runs cfg.trials independent trials, each drawing a fresh state, party and
// POVM from a per-trial RNG stream, and reports the worst slack. The result
// is a pure function of the config: trials may execute on several threads
// (capped by ENTMONO_THREADS) without changing the report.
FuzzReport run_campaign(const FuzzConfig& cfg);

}  // namespace entmono
