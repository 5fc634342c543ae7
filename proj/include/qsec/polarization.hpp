// Single-photon polarization: the four named linear polarization states and
// Born-rule detection in the rectilinear (+) and diagonal (x) bases.
#pragma once

#include <complex>

#include "qsec/rng.hpp"

namespace qsec {

using c64 = std::complex<double>;

// Unit vector in the {horizontal, vertical} basis. The named pure states:
//   horizontal   ->  (1, 0)            bit 0 in B92
//   vertical     ^   (0, 1)
//   diagonal     /   (1,  1)/sqrt(2)   bit 1 in B92 (+45 degrees)
//   antidiagonal \   (1, -1)/sqrt(2)   (-45 degrees)
struct PolarizationState {
    c64 h{0.0, 0.0};
    c64 v{0.0, 0.0};

    double norm_sq() const { return std::norm(h) + std::norm(v); }
};

PolarizationState polar_horizontal();
PolarizationState polar_vertical();
PolarizationState polar_diagonal();
PolarizationState polar_antidiagonal();

// Detector orientation: PLUS resolves {horizontal, vertical}, CROSS resolves
// {diagonal, antidiagonal}.
enum class Basis { Plus, Cross };

enum class DetectionOutcome { Horizontal, Vertical, Diagonal, Antidiagonal };

// The post-measurement eigenstate belonging to an outcome.
PolarizationState outcome_state(DetectionOutcome outcome);
Basis outcome_basis(DetectionOutcome outcome);

c64 overlap(const PolarizationState& a, const PolarizationState& b);  // <a|b>

double outcome_probability(const PolarizationState& photon, DetectionOutcome outcome);

// Born-rule projective measurement in the given basis.
DetectionOutcome measure_polarization(const PolarizationState& photon, Basis basis,
                                      RngStream& rng);

bool same_up_to_phase(const PolarizationState& a, const PolarizationState& b,
                      double tol = 1e-9);

const char* outcome_name(DetectionOutcome outcome);  // "H", "V", "D", "A"

}  // namespace qsec
