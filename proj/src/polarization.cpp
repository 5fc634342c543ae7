#include "qsec/polarization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsec {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

PolarizationState polar_horizontal() { return {c64{1.0, 0.0}, c64{0.0, 0.0}}; }
PolarizationState polar_vertical() { return {c64{0.0, 0.0}, c64{1.0, 0.0}}; }
PolarizationState polar_diagonal() { return {c64{kInvSqrt2, 0.0}, c64{kInvSqrt2, 0.0}}; }
PolarizationState polar_antidiagonal() { return {c64{kInvSqrt2, 0.0}, c64{-kInvSqrt2, 0.0}}; }

PolarizationState outcome_state(DetectionOutcome outcome) {
    switch (outcome) {
        case DetectionOutcome::Horizontal: return polar_horizontal();
        case DetectionOutcome::Vertical: return polar_vertical();
        case DetectionOutcome::Diagonal: return polar_diagonal();
        case DetectionOutcome::Antidiagonal: return polar_antidiagonal();
    }
    throw std::invalid_argument("outcome_state: unknown outcome");
}

Basis outcome_basis(DetectionOutcome outcome) {
    return (outcome == DetectionOutcome::Horizontal || outcome == DetectionOutcome::Vertical)
               ? Basis::Plus
               : Basis::Cross;
}

c64 overlap(const PolarizationState& a, const PolarizationState& b) {
    return std::conj(a.h) * b.h + std::conj(a.v) * b.v;
}

double outcome_probability(const PolarizationState& photon, DetectionOutcome outcome) {
    return std::norm(overlap(outcome_state(outcome), photon));
}

DetectionOutcome measure_polarization(const PolarizationState& photon, Basis basis,
                                      RngStream& rng) {
    const DetectionOutcome first =
        basis == Basis::Plus ? DetectionOutcome::Horizontal : DetectionOutcome::Diagonal;
    const DetectionOutcome second =
        basis == Basis::Plus ? DetectionOutcome::Vertical : DetectionOutcome::Antidiagonal;
    const double p_first = outcome_probability(photon, first);
    return rng.next_double() < p_first ? first : second;
}

bool same_up_to_phase(const PolarizationState& a, const PolarizationState& b, double tol) {
    return std::abs(std::abs(overlap(a, b)) - 1.0) <= tol;
}

const char* outcome_name(DetectionOutcome outcome) {
    switch (outcome) {
        case DetectionOutcome::Horizontal: return "H";
        case DetectionOutcome::Vertical: return "V";
        case DetectionOutcome::Diagonal: return "D";
        case DetectionOutcome::Antidiagonal: return "A";
    }
    return "?";
}

}  // namespace qsec
