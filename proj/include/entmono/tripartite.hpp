#pragma once

#include "entmono/states.hpp"

namespace entmono {

// Normalization frame for the tripartite monotone E = N~ sum_{i != j}
// sqrt(sigma_i sigma_j). Raw: N~ = 1 (E = 1 for GHZ). MaxTripartite:
// N~ = 1/3 (E = 1 for the maximal 2x2x4 state). Custom: any N~ > 0.
struct TripartiteFrame {
    enum class Kind { Raw, MaxTripartite, Custom };

    Kind kind = Kind::Raw;
    double n = 1.0;  // Custom only

    static TripartiteFrame raw() { return {}; }
    static TripartiteFrame max_tripartite() { return {Kind::MaxTripartite, 0}; }
    static TripartiteFrame custom(double n);  // requires n > 0
};

double frame_constant(const TripartiteFrame& f);

// The middle state M~ = sqrt(M) Phi^T (sy ⊗ sy) Phi sqrt(M) built from the
// eigendecomposition rho = Phi M Phi†. Unnormalized by design; complex
// symmetric, and its singular values are basis-independent even when rho has
// degenerate eigenvalues.
struct MMatrix {
    ComplexMatrix m;  // 4x4
};

// sy ⊗ sy: antidiagonal (-1, 1, 1, -1) in the basis order (00, 01, 10, 11).
const ComplexMatrix& spin_flip_operator();

// rho~ = (sy ⊗ sy) conj(rho) (sy ⊗ sy); Hermitian, PSD, unit trace.
DensityMatrix spin_flip(const DensityMatrix& rho);

MMatrix m_matrix(const DensityMatrix& rho);

// The four sigma_i: singular values of the middle matrix, decreasing, with
// rounding dust below kSingularCutoff chopped to exact zeros.
SingularSpectrum sigma_spectrum(const DensityMatrix& rho);

// Same spectrum by the alternative route: square roots of the eigenvalues of
// rho * rho~, computed as singular values of sqrt(rho~) sqrt(rho) (identical
// spectrum, no sqrt-of-noise amplification). Kept as an independent path and
// cross-checked against sigma_spectrum.
SingularSpectrum sigma_spectrum_via_product(const DensityMatrix& rho);

// The n x n sibling of the middle matrix, psi^T (sy ⊗ sy) psi for the 4 x n
// regrouped amplitude matrix. A unitary Q on the third party maps it to the
// congruence Q m Q^T, so its singular values (the nonzero ones agree with
// sigma_spectrum) are invariant.
ComplexMatrix m_tilde(const TripartitePureState& s);

// N~ sum_{i != j} sqrt(sigma_i sigma_j) over ordered pairs, equal to
// N~ [(sum sqrt(sigma))^2 - sum sigma]. Computed in the pair form, so it is
// nonnegative and exactly zero when at most one sigma is nonzero.
double e_from_spectrum(const SingularSpectrum& s, const TripartiteFrame& f);

double tripartite_e_from_rho(const DensityMatrix& rho, const TripartiteFrame& f);

// E of a pure 2x2xn state: the monotone of its two-qubit reduced state.
double tripartite_e(const TripartitePureState& s, const TripartiteFrame& f);

// Wootters concurrence C = max(0, s1 - s2 - s3 - s4) of a two-qubit state.
double concurrence(const DensityMatrix& rho);

// Residual entanglement tau = C^2_{A(BC)} - C^2_{AB} - C^2_{AC} for 2x2x2
// states, with C_{A(BC)} = 2 sqrt(det rho_A). Values in [-1e-9, 0) clamp to
// zero; anything lower is reported as a numerical failure since monogamy
// forbids it.
double tangle(const TripartitePureState& s);

}  // namespace entmono
