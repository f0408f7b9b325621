#pragma once

#include "entmono/states.hpp"

namespace entmono {

// Normalization frame for the bipartite monotone E = N (S - 1).
// Raw: N = 1. Bell: N = (2*sqrt(2)+1)/7, so E = 1 for Bell states.
// MaxD(D): N = (D*sqrt(D)+1)/(D^3-1), so E = 1 for the D-dimensional
// maximally entangled state (D = 2 reduces to Bell). Custom: any N > 0.
struct BipartiteFrame {
    enum class Kind { Raw, Bell, MaxD, Custom };

    Kind kind = Kind::Raw;
    int d = 0;        // MaxD only
    double n = 1.0;   // Custom only

    static BipartiteFrame raw() { return {}; }
    static BipartiteFrame bell() { return {Kind::Bell, 0, 0}; }
    static BipartiteFrame max_d(int d);      // requires d >= 2
    static BipartiteFrame custom(double n);  // requires n > 0
};

double frame_constant(const BipartiteFrame& f);

// S = (sum_i sqrt(sigma_i))^2 over the singular values of psi; in [1, D^1.5]
// with D = min(n1, n2). A spectrum that is rank 1 after the cutoff pins
// S = 1 exactly (the lone singular value is 1 by normalization).
double schmidt_sum(const BipartitePureState& s);

// E = N (S - 1). Zero exactly when the state is a product state (second
// singular value below kSingularCutoff).
double bipartite_e(const BipartitePureState& s, const BipartiteFrame& f);

struct PovmAverage {
    double avg;     // sum_i p_i E(branch_i), branches below 1e-14 dropped
    double before;  // E of the input state
};

// Applies the two POVM branches on the chosen party (A acts on the left,
// B on the right as psi A^T) and returns the probability-weighted average
// entanglement next to the pre-measurement value.
PovmAverage average_e_after_povm(const BipartitePureState& s, const PovmPair& p,
                                 Party party, const BipartiteFrame& f);

}  // namespace entmono
