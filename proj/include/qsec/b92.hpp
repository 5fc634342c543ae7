// The B92 protocol: two-state preparation, two-basis detection,
// conclusive-outcome sifting and full session simulation over the
// collective-rotation channel with an optional eavesdropper.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsec/noise.hpp"
#include "qsec/polarization.hpp"
#include "qsec/rng.hpp"

namespace qsec {

// bit 0 -> horizontal, bit 1 -> diagonal (+45 degrees).
PolarizationState alice_prepare(int bit);

// Born-rule detection in Bob's chosen basis.
inline DetectionOutcome bob_measure(const PolarizationState& photon, Basis basis,
                                    RngStream& rng) {
    return measure_polarization(photon, basis, rng);
}

// vertical -> 1, antidiagonal -> 0, anything else is inconclusive (nullopt).
std::optional<int> sift_outcome(DetectionOutcome outcome);

struct SessionResult {
    std::uint64_t pulses_sent = 0;
    std::uint64_t conclusive_count = 0;
    double sifting_rate = 0.0;
    std::string alice_key;  // '0'/'1' characters
    std::string bob_key;
    double qber_estimate = 0.0;  // over the disclosed sample; 0 when nothing disclosed
    std::uint64_t disclosed_count = 0;
    bool eve_detected = false;
};

// Runs a full session: Alice's uniform random bits pass through the channel
// rotation and the optional eavesdropper; Bob measures in a uniform random
// basis; conclusive outcomes are sifted. A random disclose_fraction sample of
// the sifted bits is compared publicly to estimate the QBER (those bits are
// discarded from both keys), and eve_detected applies detect_eavesdropping
// against the channel's expected no-Eve QBER.
SessionResult run_b92_session(std::uint64_t n_pulses, const ChannelConfig& channel,
                              std::optional<EveStrategy> eve, double disclose_fraction,
                              Seed seed);

namespace detail {
// floor(fraction * total) distinct indices, sorted; shared by the session
// implementations.
std::vector<std::uint64_t> sample_disclosure(std::uint64_t total, double fraction,
                                             RngStream& rng);
}  // namespace detail

}  // namespace qsec
