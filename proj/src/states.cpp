#include "entmono/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace entmono {

const char* party_name(Party p) {
    switch (p) {
        case Party::A: return "A";
        case Party::B: return "B";
        case Party::C: return "C";
    }
    return "?";
}

// ===================== rng =====================

namespace {

// splitmix64 output function; the stream for trial i is the i-th output of
// splitmix64 seeded at `seed`, a well-mixed 64-bit value per (seed, index).
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng Rng::stream(RngSeed seed, std::uint64_t index) {
    return Rng(splitmix64_at(seed, index));
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
    // Lemire reduction; bias is < n / 2^64, immaterial for sampling choices.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double Rng::gauss() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Marsaglia polar method.
    for (;;) {
        double u = 2.0 * uniform01() - 1.0;
        double v = 2.0 * uniform01() - 1.0;
        double s = u * u + v * v;
        if (s <= 0.0 || s >= 1.0) continue;
        double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        has_cached_ = true;
        return u * f;
    }
}

// ===================== construction =====================

namespace {

constexpr double kZeroNorm = 1e-12;

ComplexMatrix normalized_or_throw(const ComplexMatrix& m, const char* who) {
    if (!m.allFinite()) throw InvalidInputError(std::string(who) + ": non-finite entry");
    double norm = m.norm();
    if (norm < kZeroNorm) throw ZeroStateError(std::string(who) + ": zero state");
    return m / norm;
}

}  // namespace

BipartitePureState bipartite_from_matrix(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw InvalidInputError("bipartite_from_matrix: empty matrix");
    return BipartitePureState{normalized_or_throw(m, "bipartite_from_matrix")};
}

TripartitePureState tripartite_from_tensor(const ComplexMatrix& amps_4xn) {
    if (amps_4xn.rows() != 4)
        throw DimensionMismatchError("tripartite_from_tensor: expected 4 rows, got " +
                                     std::to_string(amps_4xn.rows()));
    if (amps_4xn.cols() < 1)
        throw InvalidInputError("tripartite_from_tensor: n must be >= 1");
    return TripartitePureState{normalized_or_throw(amps_4xn, "tripartite_from_tensor")};
}

DensityMatrix density_from_matrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquareError("density_from_matrix: matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
    if (m.rows() == 0) throw InvalidInputError("density_from_matrix: empty matrix");
    if (!m.allFinite()) throw InvalidInputError("density_from_matrix: non-finite entry");
    double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol)
        throw NotHermitianError("density_from_matrix: |m - m†| = " + std::to_string(herm));
    double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_dev > kHermTol)
        throw NotNormalizedError("density_from_matrix: |tr - 1| = " + std::to_string(trace_dev));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("density_from_matrix: eigensolver did not converge");
    if (solver.eigenvalues().minCoeff() < -kEigClamp)
        throw NotPsdError("density_from_matrix: eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()));
    return DensityMatrix{m};
}

BipartitePureState regroup_as_bipartite(const TripartitePureState& s) {
    return BipartitePureState{s.amps};
}

// ===================== sampling =====================

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_gauss();
    return m;
}

}  // namespace

BipartitePureState random_bipartite_state(int n1, int n2, Rng& rng) {
    if (n1 < 1 || n2 < 1)
        throw InvalidParameterError("random_bipartite_state: dims must be >= 1");
    ComplexMatrix m = gaussian_matrix(n1, n2, rng);
    return BipartitePureState{m / m.norm()};
}

BipartitePureState random_bipartite_state(int n1, int n2, RngSeed seed) {
    Rng rng(seed);
    return random_bipartite_state(n1, n2, rng);
}

TripartitePureState random_tripartite_state(int n, Rng& rng) {
    if (n < 1) throw InvalidParameterError("random_tripartite_state: n must be >= 1");
    ComplexMatrix m = gaussian_matrix(4, n, rng);
    return TripartitePureState{m / m.norm()};
}

TripartitePureState random_tripartite_state(int n, RngSeed seed) {
    Rng rng(seed);
    return random_tripartite_state(n, rng);
}

ComplexMatrix haar_unitary(int d, Rng& rng) {
    if (d < 1) throw InvalidParameterError("haar_unitary: d must be >= 1");
    ComplexMatrix g = gaussian_matrix(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Folding the R diagonal's phases into Q makes the distribution Haar.
    for (int i = 0; i < d; ++i) {
        Complex rii = r(i, i);
        double mag = std::abs(rii);
        q.col(i) *= (mag > 0) ? rii / mag : Complex(1.0, 0.0);
    }
    return q;
}

PovmPair random_povm_pair(int d, Rng& rng) {
    if (d < 1) throw InvalidParameterError("random_povm_pair: d must be >= 1");
    RealVector a(d);
    for (int i = 0; i < d; ++i) a[i] = rng.uniform01();
    ComplexMatrix u1 = haar_unitary(d, rng);
    ComplexMatrix u2 = haar_unitary(d, rng);
    ComplexMatrix v = haar_unitary(d, rng);
    Eigen::VectorXcd d1 = a.cast<Complex>();
    Eigen::VectorXcd d2 = (1.0 - a.array().square()).sqrt().matrix().cast<Complex>();
    return PovmPair{u1 * d1.asDiagonal() * v, u2 * d2.asDiagonal() * v};
}

PovmPair random_povm_pair(int d, RngSeed seed) {
    Rng rng(seed);
    return random_povm_pair(d, rng);
}

}  // namespace entmono
