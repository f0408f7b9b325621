#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entmono/tripartite.hpp"

namespace entmono {

// One row of the coupling sweep for the isotropic XY chain with three-spin
// interaction: the correlation factor G fixes the two-neighbor reduced
// state, from which the tripartite monotone E and the concurrence C follow.
struct ScanRecord {
    double lambda;       // three-spin coupling, > 0
    double g;            // correlation factor, in (0, 2/pi]
    double e;            // tripartite monotone of the reduced state, >= 0
    double c;            // concurrence of the reduced state, in [0, 1]
    double de_dlambda;   // finite-difference derivative on the scan grid
    double dc_dlambda;
};

enum class Measure { E, C };

const char* measure_name(Measure m);

// A detected first-derivative discontinuity.
struct KinkReport {
    Measure measure;
    double location;  // grid point with the strongest second difference
    double jump;      // estimated |d/dlambda| discontinuity, > 0
};

// G = 2/pi below the transition (lambda < 1), 2/(pi lambda) above;
// continuous at lambda = 1. Throws InvalidParameterError for lambda <= 0.
double g_factor(double lambda);

// The two-nearest-neighbor reduced density matrix in the basis
// (00, 01, 10, 11): diagonal ((1-G^2)/4, (1+G^2)/4, (1+G^2)/4, (1-G^2)/4)
// with G/2 on the central off-diagonal. Requires g in [0, 1).
DensityMatrix neighbor_rho(double g);

// Closed-form oracle in the Raw frame: 2 sqrt(1-G^2) + (1-G^2), scaled by
// the frame constant; computed through the generic monotone pipeline.
double ground_state_e(double lambda, const TripartiteFrame& f);

// Oracle: max(0, G - (1-G^2)/2); vanishes for G <= sqrt(2) - 1.
double ground_state_concurrence(double lambda);

// Uniform grid over [lambda_min, lambda_max] inclusive, steps >= 3 points.
// Derivatives are central differences (one-sided at the endpoints). Grid
// points may be evaluated in parallel; the result is in grid order and
// independent of scheduling.
std::vector<ScanRecord> scan(double lambda_min, double lambda_max, int steps,
                             const TripartiteFrame& f);

// Flags grid points whose second difference stands clear of the smooth
// background: threshold is 10x the median of the strictly positive second
// differences (plus a rounding floor), so it stays pinned to the curvature
// scale h^2 while a true derivative jump scales as h. Contiguous flagged
// points merge into one kink; the jump estimate adds the largest neighbor
// spike to cover kinks that fall between grid points. Requires >= 5 records.
std::vector<KinkReport> detect_kinks(const std::vector<ScanRecord>& records,
                                     Measure measure);

// CSV with the exact header lambda,G,E,C,dE_dlambda,dC_dlambda and
// 12-significant-digit values.
void write_csv(std::ostream& os, const std::vector<ScanRecord>& records);

// Self-contained SVG line plot: E solid, C dashed, kinks marked. The CSV is
// the data of record; this is presentation only.
std::string render_svg(const std::vector<ScanRecord>& records,
                       const std::vector<KinkReport>& kinks);

}  // namespace entmono
