#include "entmono/bipartite.hpp"

#include <algorithm>
#include <cmath>

namespace entmono {

BipartiteFrame BipartiteFrame::max_d(int d) {
    if (d < 2) throw InvalidParameterError("BipartiteFrame::max_d: d must be >= 2");
    return {Kind::MaxD, d, 0};
}

BipartiteFrame BipartiteFrame::custom(double n) {
    if (!(n > 0)) throw InvalidParameterError("BipartiteFrame::custom: N must be > 0");
    return {Kind::Custom, 0, n};
}

double frame_constant(const BipartiteFrame& f) {
    switch (f.kind) {
        case BipartiteFrame::Kind::Raw:
            return 1.0;
        case BipartiteFrame::Kind::Bell:
            return (2.0 * std::sqrt(2.0) + 1.0) / 7.0;
        case BipartiteFrame::Kind::MaxD: {
            double d = f.d;
            return (d * std::sqrt(d) + 1.0) / (d * d * d - 1.0);
        }
        case BipartiteFrame::Kind::Custom:
            return f.n;
    }
    throw InvalidParameterError("frame_constant: unknown frame");
}

double schmidt_sum(const BipartitePureState& s) {
    SingularSpectrum sigma = chop_small(singular_values(s.psi));
    // A lone surviving singular value equals 1 by normalization; pinning it
    // makes E vanish exactly on product states instead of leaving ulp dust.
    if (sigma.values.size() < 2 || sigma.values[1] == 0.0) return 1.0;
    double root_sum = 0;
    for (double v : sigma.values) root_sum += std::sqrt(v);
    return root_sum * root_sum;
}

double bipartite_e(const BipartitePureState& s, const BipartiteFrame& f) {
    return std::max(0.0, frame_constant(f) * (schmidt_sum(s) - 1.0));
}

namespace {

constexpr double kBranchFloor = 1e-14;

}  // namespace

PovmAverage average_e_after_povm(const BipartitePureState& s, const PovmPair& p,
                                 Party party, const BipartiteFrame& f) {
    int need = party == Party::A ? s.n1() : party == Party::B ? s.n2() : -1;
    if (need < 0)
        throw DimensionMismatchError("average_e_after_povm: bipartite states have no party C");
    if (p.dim() != need || p.a1.cols() != p.dim() || p.a2.rows() != p.dim() ||
        p.a2.cols() != p.dim())
        throw DimensionMismatchError("average_e_after_povm: POVM dim " +
                                     std::to_string(p.dim()) + ", party dim " +
                                     std::to_string(need));

    PovmAverage out{0.0, bipartite_e(s, f)};
    for (const ComplexMatrix* a : {&p.a1, &p.a2}) {
        ComplexMatrix theta =
            party == Party::A ? ComplexMatrix(*a * s.psi) : ComplexMatrix(s.psi * a->transpose());
        double prob = theta.squaredNorm();
        if (prob < kBranchFloor) continue;
        out.avg += prob * bipartite_e(BipartitePureState{theta / std::sqrt(prob)}, f);
    }
    return out;
}

}  // namespace entmono
