#pragma once

#include <cstdint>
#include <random>

#include "entmono/linalg.hpp"

namespace entmono {

using RngSeed = std::uint64_t;

enum class Party { A, B, C };

const char* party_name(Party p);

// Deterministic random source. Uniform and Gaussian variates are generated
// from raw mt19937_64 output with fixed algorithms (no std::*_distribution,
// whose sequences are implementation-defined), so any (seed, draw-order)
// pair reproduces bit-identical values everywhere.
class Rng {
  public:
    explicit Rng(RngSeed seed) : gen_(seed) {}

    // Independent stream for trial `index` of a campaign seeded by `seed`;
    // streams are identical regardless of how trials are scheduled.
    static Rng stream(RngSeed seed, std::uint64_t index);

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer on [0, n); n >= 1.
    std::uint64_t uniform_below(std::uint64_t n);

    // Standard normal via the polar method (sqrt/log only).
    double gauss();

    Complex complex_gauss() {
        double re = gauss();
        double im = gauss();
        return {re, im};
    }

  private:
    std::mt19937_64 gen_;
    double cached_ = 0;
    bool has_cached_ = false;
};

// ===================== state types =====================
// Constructed through the factories below, which enforce the norm and
// validity invariants; direct member access is for reading.

struct BipartitePureState {
    ComplexMatrix psi;  // n1 x n2 amplitude matrix, unit Frobenius norm

    int n1() const { return static_cast<int>(psi.rows()); }
    int n2() const { return static_cast<int>(psi.cols()); }
};

struct TripartitePureState {
    // Amplitudes a_{ijk} of a 2 x 2 x n state, flattened to 4 x n with row
    // index 2i+j and column index k. Unit Frobenius norm.
    ComplexMatrix amps;

    int n() const { return static_cast<int>(amps.cols()); }
    Complex amp(int i, int j, int k) const { return amps(2 * i + j, k); }
};

struct DensityMatrix {
    ComplexMatrix rho;  // square, Hermitian, PSD, unit trace

    int dim() const { return static_cast<int>(rho.rows()); }
};

struct PovmPair {
    ComplexMatrix a1, a2;  // d x d, a1†a1 + a2†a2 = I

    int dim() const { return static_cast<int>(a1.rows()); }
};

// ===================== construction =====================

// Normalizes m to a unit-norm pure state. Throws ZeroStateError when the
// norm is below 1e-12.
BipartitePureState bipartite_from_matrix(const ComplexMatrix& m);

// Same, for a 2x2xn tensor given in the flattened 4 x n layout (row 2i+j).
TripartitePureState tripartite_from_tensor(const ComplexMatrix& amps_4xn);

// Validates Hermiticity, unit trace and positivity (tolerance kHermTol /
// kEigClamp). For untrusted input; internal code builds the struct directly
// where the invariants hold by construction.
DensityMatrix density_from_matrix(const ComplexMatrix& m);

// The 2x2xn state viewed as a 4 ⊗ n bipartite state; norm is preserved and
// the amplitude layout is shared, so this is just a relabeling.
BipartitePureState regroup_as_bipartite(const TripartitePureState& s);

// ===================== sampling =====================

// Haar-uniform pure states: i.i.d. standard complex Gaussian amplitudes,
// normalized. Entries are drawn row-major, real part before imaginary.
BipartitePureState random_bipartite_state(int n1, int n2, Rng& rng);
BipartitePureState random_bipartite_state(int n1, int n2, RngSeed seed);
TripartitePureState random_tripartite_state(int n, Rng& rng);
TripartitePureState random_tripartite_state(int n, RngSeed seed);

// Haar-random unitary: QR of a complex Ginibre matrix with the R diagonal's
// phases folded into Q.
ComplexMatrix haar_unitary(int d, Rng& rng);

// Two-outcome POVM (A1, A2) = (U1 D1 V, U2 D2 V) with D1 = diag(a_k),
// D2 = diag(sqrt(1 - a_k^2)), a_k uniform on [0, 1], U1, U2, V Haar.
// Completeness A1†A1 + A2†A2 = I holds by construction.
PovmPair random_povm_pair(int d, Rng& rng);
PovmPair random_povm_pair(int d, RngSeed seed);

}  // namespace entmono
