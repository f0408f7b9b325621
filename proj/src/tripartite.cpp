#include "entmono/tripartite.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace entmono {

TripartiteFrame TripartiteFrame::custom(double n) {
    if (!(n > 0)) throw InvalidParameterError("TripartiteFrame::custom: N must be > 0");
    return {Kind::Custom, n};
}

double frame_constant(const TripartiteFrame& f) {
    switch (f.kind) {
        case TripartiteFrame::Kind::Raw: return 1.0;
        case TripartiteFrame::Kind::MaxTripartite: return 1.0 / 3.0;
        case TripartiteFrame::Kind::Custom: return f.n;
    }
    throw InvalidParameterError("frame_constant: unknown frame");
}

const ComplexMatrix& spin_flip_operator() {
    static const ComplexMatrix y = [] {
        ComplexMatrix sy(2, 2);
        sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        return kron(sy, sy);
    }();
    return y;
}

namespace {

void require_two_qubit(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 4)
        throw WrongDimensionError(std::string(who) + ": expected a 4x4 density matrix, got " +
                                  std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
}

}  // namespace

DensityMatrix spin_flip(const DensityMatrix& rho) {
    require_two_qubit(rho, "spin_flip");
    const ComplexMatrix& y = spin_flip_operator();
    // Y is unitary and real, so Hermiticity, positivity and trace survive.
    return DensityMatrix{y * rho.rho.conjugate() * y};
}

MMatrix m_matrix(const DensityMatrix& rho) {
    require_two_qubit(rho, "m_matrix");
    HermitianEigenSystem eig = hermitian_eig(rho.rho);
    RealVector w = eig.eigenvalues;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w[i] < -kEigClamp)
            throw NotPsdError("m_matrix: eigenvalue " + std::to_string(w[i]));
        if (w[i] < 0) w[i] = 0;
    }
    Eigen::VectorXcd sq = w.cwiseSqrt().cast<Complex>();
    const ComplexMatrix& phi = eig.eigenvectors;
    // Note the plain transpose: the middle matrix is complex symmetric, not
    // Hermitian, and mixing degenerate eigenvectors only conjugates it by a
    // congruence, which leaves the singular values alone.
    ComplexMatrix m = sq.asDiagonal() * ComplexMatrix(phi.transpose() * spin_flip_operator() * phi) *
                      sq.asDiagonal();
    return MMatrix{m};
}

SingularSpectrum sigma_spectrum(const DensityMatrix& rho) {
    SingularSpectrum s = chop_small(singular_values(m_matrix(rho).m));
#ifndef NDEBUG
    // The two construction routes must agree; disagreement means a broken
    // eigenbasis or clamping bug, not tolerable noise.
    SingularSpectrum alt = sigma_spectrum_via_product(rho);
    for (size_t i = 0; i < s.values.size(); ++i)
        assert(std::abs(s.values[i] - alt.values[i]) < 1e-8);
#endif
    return s;
}

SingularSpectrum sigma_spectrum_via_product(const DensityMatrix& rho) {
    require_two_qubit(rho, "sigma_spectrum_via_product");
    // For X = sqrt(rho~) sqrt(rho), X X† is similar to rho rho~, so the
    // singular values of X are the square roots of the eigenvalues of
    // rho rho~ without ever taking sqrt of a noisy near-zero eigenvalue.
    ComplexMatrix x = sqrt_psd(spin_flip(rho).rho) * sqrt_psd(rho.rho);
    return chop_small(singular_values(x));
}

ComplexMatrix m_tilde(const TripartitePureState& s) {
    return s.amps.transpose() * spin_flip_operator() * s.amps;
}

double e_from_spectrum(const SingularSpectrum& s, const TripartiteFrame& f) {
    // Pair form of (sum sqrt)^2 - sum: nonnegative by construction, and
    // exactly zero whenever at most one sigma survives the cutoff.
    double e = 0;
    for (size_t i = 0; i < s.values.size(); ++i)
        for (size_t j = i + 1; j < s.values.size(); ++j)
            e += 2.0 * std::sqrt(s.values[i] * s.values[j]);
    return frame_constant(f) * e;
}

double tripartite_e_from_rho(const DensityMatrix& rho, const TripartiteFrame& f) {
    return e_from_spectrum(sigma_spectrum(rho), f);
}

double tripartite_e(const TripartitePureState& s, const TripartiteFrame& f) {
    return tripartite_e_from_rho(partial_trace_last(s), f);
}

double concurrence(const DensityMatrix& rho) {
    SingularSpectrum s = sigma_spectrum(rho);
    double c = s.values[0];
    for (size_t i = 1; i < s.values.size(); ++i) c -= s.values[i];
    return std::clamp(c, 0.0, 1.0);
}

double tangle(const TripartitePureState& s) {
    if (s.n() != 2)
        throw WrongDimensionError("tangle: defined for 2x2x2 states, got n = " +
                                  std::to_string(s.n()));

    // rho_A, tracing out B and C; Eigen's dot conjugates its left factor.
    ComplexMatrix rho_a = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int ip = 0; ip < 2; ++ip)
            for (int j = 0; j < 2; ++j)
                rho_a(i, ip) += s.amps.row(2 * ip + j).dot(s.amps.row(2 * i + j));
    double det_a = std::max(0.0, std::real(rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0)));
    double c_a_bc_sq = 4.0 * det_a;

    // rho_AC in the basis (2i+k), tracing out B.
    ComplexMatrix rho_ac = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int ip = 0; ip < 2; ++ip)
                for (int kp = 0; kp < 2; ++kp)
                    for (int j = 0; j < 2; ++j)
                        rho_ac(2 * i + k, 2 * ip + kp) +=
                            s.amp(i, j, k) * std::conj(s.amp(ip, j, kp));

    double c_ab = concurrence(partial_trace_last(s));
    double c_ac = concurrence(DensityMatrix{rho_ac});
    double tau = c_a_bc_sq - c_ab * c_ab - c_ac * c_ac;
    if (tau < -1e-9)
        throw NumericalFailureError("tangle: monogamy violated numerically, tau = " +
                                    std::to_string(tau));
    return std::clamp(tau, 0.0, 1.0);
}

}  // namespace entmono
