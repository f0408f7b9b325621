#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "entmono/errors.hpp"

namespace entmono {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Global tolerance budget. Hermiticity and normalization checks use kHermTol;
// eigenvalues in [-kEigClamp, 0) are rounding noise on PSD matrices and are
// clamped to zero; singular values below kSingularCutoff are rounding dust on
// exact zeros (rank-deficient reduced states) and are treated as zero so that
// sqrt-based measures vanish exactly where the theory says they must.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kEigClamp = 1e-10;
inline constexpr double kSingularCutoff = 1e-10;

struct SingularSpectrum {
    std::vector<double> values;  // nonnegative, sorted decreasing

    double sum() const {
        double s = 0;
        for (double v : values) s += v;
        return s;
    }
};

struct HermitianEigenSystem {
    RealVector eigenvalues;      // sorted decreasing
    ComplexMatrix eigenvectors;  // columns, ordered to match
};

struct TripartitePureState;  // states.hpp
struct DensityMatrix;        // states.hpp

// Eigendecomposition of a Hermitian matrix, eigenvalues decreasing.
// Throws NotSquareError / NotHermitianError (tolerance kHermTol).
HermitianEigenSystem hermitian_eig(const ComplexMatrix& m);

// Singular values of an arbitrary complex matrix, decreasing.
SingularSpectrum singular_values(const ComplexMatrix& m);

// Square root of a positive semidefinite Hermitian matrix. Eigenvalues in
// [-kEigClamp, 0) clamp to zero; anything lower throws NotPsdError.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

// rho_AB = tr_C |psi><psi| for a 2x2xn pure state; always 4x4, unit trace.
DensityMatrix partial_trace_last(const TripartitePureState& s);

// Kronecker product, (a ⊗ b)_{(i p + k),(j q + l)} = a_ij b_kl for b p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Zeroes entries below the cutoff; see kSingularCutoff.
SingularSpectrum chop_small(SingularSpectrum s, double cutoff = kSingularCutoff);

}  // namespace entmono
