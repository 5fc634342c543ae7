// Collective-rotation noise channel: the deterministic polarization rotation,
// the two eavesdropper strategies, the closed-form bit-error-rate curves with
// regime classification, and the threshold eavesdropping-detection rule.
#pragma once

#include <cstdint>
#include <optional>

#include "qsec/polarization.hpp"
#include "qsec/rng.hpp"

namespace qsec {

// Channel that rotates every photon by the same fixed angle theta in
// [0, pi/2]; epsilon = sin^2(theta) is the noise parameter of the analytic
// curves.
class ChannelConfig {
public:
    explicit ChannelConfig(double theta);
    static ChannelConfig from_epsilon(double epsilon);

    double theta() const { return theta_; }
    double epsilon() const { return epsilon_; }

private:
    double theta_;
    double epsilon_;
};

// MeasuredResend: Eve measures in a random basis and forwards the
// post-measurement state. ConclusiveFixed: on a conclusive outcome Eve
// forwards the B92 state she inferred (vertical -> diagonal, antidiagonal ->
// horizontal); on an inconclusive outcome she forwards the post-measurement
// state.
enum class EveStrategy { MeasuredResend, ConclusiveFixed };

// The paper-level analytic error rates: ber0 for no eavesdropper, ber1 for
// measure-and-resend, ber2 for conclusive-fixed resend.
struct BerTriple {
    double ber0;
    double ber1;
    double ber2;
};

// 2x2 rotation [[cos, -sin], [sin, cos]] applied to the amplitude vector.
PolarizationState rotate_state(const PolarizationState& p, double theta);

// ber0 = eps, ber1 = (7 + 8 eps (1 - eps)) / 16, ber2 = 1/4 + eps/2.
BerTriple analytic_ber(double epsilon);

enum class NoiseRegime {
    SecureDetectable,     // eps <= 0.5: ber1 >= ber2 >= ber0, any Eve detectable
    PartiallyDetectable,  // 0.5 < eps <= eps*: ber1 >= ber0 >= ber2
    Avoid,                // eps > eps*: channel unusable
};

NoiseRegime classify_regime(double epsilon);
const char* regime_name(NoiseRegime regime);

// Root of ber1(eps) = eps: (sqrt(288) - 8) / 16 ~ 0.5607.
double epsilon_star();

PolarizationState apply_eve(const PolarizationState& photon, EveStrategy strategy,
                            RngStream& rng);

// Conditional error rate among conclusive sifted bits that this simulator's
// rotation model predicts with no eavesdropper: 2 eps / (2 eps + 1). This is
// the detection ceiling sessions use; it intentionally differs from the
// analytic ber0 = eps, and reports show both.
double expected_no_eve_qber(double epsilon);

struct QberEstimate {
    double qber = 0.0;
    double std_error = 0.0;
    std::uint64_t conclusive_count = 0;
    std::uint64_t pulses = 0;
};

// Monte Carlo QBER of the B92 pipeline under rotation theta and an optional
// eavesdropper: error fraction among conclusive sifted bits plus its binomial
// standard error. Throws ProbabilisticFailure when no pulse was conclusive.
QberEstimate simulate_eve_qber(double theta, std::optional<EveStrategy> strategy,
                               std::uint64_t n_pulses, Seed seed);

// True iff observed_qber > epsilon + 3 sqrt(eps (1-eps) / sample_size), i.e.
// the observation exceeds the no-Eve ceiling by more than three binomial
// standard deviations.
bool detect_eavesdropping(double observed_qber, double epsilon, std::uint64_t sample_size);

}  // namespace qsec
