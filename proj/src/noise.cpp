#include "qsec/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsec/b92.hpp"
#include "qsec/errors.hpp"

namespace qsec {

ChannelConfig::ChannelConfig(double theta) : theta_(theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0))
        throw std::invalid_argument("ChannelConfig: theta must lie in [0, pi/2]");
    const double s = std::sin(theta);
    epsilon_ = s * s;
}

ChannelConfig ChannelConfig::from_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("ChannelConfig: epsilon must lie in [0, 1]");
    return ChannelConfig(std::asin(std::sqrt(epsilon)));
}

PolarizationState rotate_state(const PolarizationState& p, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * p.h - s * p.v, s * p.h + c * p.v};
}

BerTriple analytic_ber(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("analytic_ber: epsilon must lie in [0, 1]");
    return BerTriple{
        epsilon,
        (7.0 + 8.0 * epsilon * (1.0 - epsilon)) / 16.0,
        0.25 + 0.5 * epsilon,
    };
}

double epsilon_star() { return (std::sqrt(288.0) - 8.0) / 16.0; }

NoiseRegime classify_regime(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("classify_regime: epsilon must lie in [0, 1]");
    if (epsilon <= 0.5) return NoiseRegime::SecureDetectable;
    if (epsilon <= epsilon_star()) return NoiseRegime::PartiallyDetectable;
    return NoiseRegime::Avoid;
}

const char* regime_name(NoiseRegime regime) {
    switch (regime) {
        case NoiseRegime::SecureDetectable: return "SECURE_DETECTABLE";
        case NoiseRegime::PartiallyDetectable: return "PARTIALLY_DETECTABLE";
        case NoiseRegime::Avoid: return "AVOID";
    }
    return "?";
}

PolarizationState apply_eve(const PolarizationState& photon, EveStrategy strategy,
                            RngStream& rng) {
    const Basis basis = rng.next_bit() ? Basis::Cross : Basis::Plus;
    const DetectionOutcome outcome = measure_polarization(photon, basis, rng);
    if (strategy == EveStrategy::ConclusiveFixed) {
        if (outcome == DetectionOutcome::Vertical) return polar_diagonal();
        if (outcome == DetectionOutcome::Antidiagonal) return polar_horizontal();
    }
    return outcome_state(outcome);
}

double expected_no_eve_qber(double epsilon) {
    return 2.0 * epsilon / (2.0 * epsilon + 1.0);
}

QberEstimate simulate_eve_qber(double theta, std::optional<EveStrategy> strategy,
                               std::uint64_t n_pulses, Seed seed) {
    if (n_pulses == 0) throw std::invalid_argument("simulate_eve_qber: need at least one pulse");
    RngStream rng(seed);
    std::uint64_t conclusive = 0;
    std::uint64_t errors = 0;
    for (std::uint64_t i = 0; i < n_pulses; ++i) {
        const int alice_bit = rng.next_bit() ? 1 : 0;
        PolarizationState photon = rotate_state(alice_prepare(alice_bit), theta);
        if (strategy) photon = apply_eve(photon, *strategy, rng);
        const Basis basis = rng.next_bit() ? Basis::Cross : Basis::Plus;
        const auto bob_bit = sift_outcome(bob_measure(photon, basis, rng));
        if (!bob_bit) continue;
        ++conclusive;
        if (*bob_bit != alice_bit) ++errors;
    }
    if (conclusive == 0)
        throw ProbabilisticFailure("simulate_eve_qber: no conclusive events, QBER undefined",
                                   0.0);
    const double q = static_cast<double>(errors) / static_cast<double>(conclusive);
    const double se = std::sqrt(q * (1.0 - q) / static_cast<double>(conclusive));
    return QberEstimate{q, se, conclusive, n_pulses};
}

bool detect_eavesdropping(double observed_qber, double epsilon, std::uint64_t sample_size) {
    if (sample_size == 0)
        throw std::invalid_argument("detect_eavesdropping: sample_size must be positive");
    const double margin =
        3.0 * std::sqrt(epsilon * (1.0 - epsilon) / static_cast<double>(sample_size));
    return observed_qber > epsilon + margin;
}

}  // namespace qsec
