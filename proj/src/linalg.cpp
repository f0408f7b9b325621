#include "entmono/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>

#include "entmono/states.hpp"

namespace entmono {

namespace {

void require_finite(const ComplexMatrix& m, const char* who) {
    if (!m.allFinite()) throw InvalidInputError(std::string(who) + ": non-finite entry");
}

void require_nonempty(const ComplexMatrix& m, const char* who) {
    if (m.rows() == 0 || m.cols() == 0)
        throw InvalidInputError(std::string(who) + ": empty matrix");
}

void require_hermitian(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw NotSquareError(std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermTol)
        throw NotHermitianError(std::string(who) + ": |m - m†| = " + std::to_string(dev));
}

}  // namespace

HermitianEigenSystem hermitian_eig(const ComplexMatrix& m) {
    require_nonempty(m, "hermitian_eig");
    require_finite(m, "hermitian_eig");
    require_hermitian(m, "hermitian_eig");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("hermitian_eig: eigensolver did not converge");

    // Eigen returns ascending order; flip to decreasing.
    HermitianEigenSystem out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

SingularSpectrum singular_values(const ComplexMatrix& m) {
    require_nonempty(m, "singular_values");
    require_finite(m, "singular_values");

    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    if (svd.info() != Eigen::Success)
        throw NumericalFailureError("singular_values: SVD did not converge");

    SingularSpectrum out;
    out.values.assign(svd.singularValues().data(),
                      svd.singularValues().data() + svd.singularValues().size());
    return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
    require_nonempty(m, "sqrt_psd");
    require_finite(m, "sqrt_psd");
    require_hermitian(m, "sqrt_psd");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("sqrt_psd: eigensolver did not converge");

    RealVector w = solver.eigenvalues();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w[i] < -kEigClamp)
            throw NotPsdError("sqrt_psd: eigenvalue " + std::to_string(w[i]));
        if (w[i] < 0) w[i] = 0;
    }
    const ComplexMatrix& v = solver.eigenvectors();
    Eigen::VectorXcd sq = w.cwiseSqrt().cast<Complex>();
    return v * sq.asDiagonal() * v.adjoint();
}

DensityMatrix partial_trace_last(const TripartitePureState& s) {
    double norm = s.amps.norm();
    if (std::abs(norm - 1.0) > kHermTol)
        throw NotNormalizedError("partial_trace_last: state norm " + std::to_string(norm));
    // In the 4 x n layout, tracing out the last party is a Gram matrix.
    return DensityMatrix{s.amps * s.amps.adjoint()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

SingularSpectrum chop_small(SingularSpectrum s, double cutoff) {
    for (double& v : s.values)
        if (v < cutoff) v = 0;
    return s;
}

}  // namespace entmono
