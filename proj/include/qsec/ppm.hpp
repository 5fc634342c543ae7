// Pulse-position-modulation framing and the improved B92 session: key bits
// come from the time-slot index of conclusively detected pulses, giving b
// key bits per kept frame instead of one.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qsec/b92.hpp"
#include "qsec/noise.hpp"
#include "qsec/rng.hpp"

namespace qsec {

// One frame: a single optical pulse occupying one of 2^bits_per_pulse
// logical time slots.
struct PpmFrame {
    std::size_t bits_per_pulse = 0;
    std::uint64_t n_slots = 0;
    std::uint64_t occupied_slot = 0;
    PolarizationState pulse;
};

// Slot index of a bit pattern, read big-endian: "10" -> 2.
std::uint64_t ppm_encode(std::string_view bits);

// Inverse of ppm_encode; slot must be below 2^bits_per_pulse.
std::string ppm_decode(std::uint64_t slot, std::size_t bits_per_pulse);

struct PpmSessionResult {
    SessionResult session;  // counts are in frames; keys hold the slot bits
    std::size_t bits_per_pulse = 0;
    std::uint64_t n_slots = 0;
};

// Per frame, Alice picks a uniform slot (its bits are the prospective key
// contribution) and a uniform B92 polarization; Bob keeps the decoded slot
// bits of conclusively detected frames. Slot timing is classical in this
// model, so noise affects only which frames are kept. Disclosure samples
// whole frames and compares Bob's sifted polarization bit with Alice's to
// estimate the QBER used for eavesdropping detection.
PpmSessionResult run_ppm_session(std::uint64_t n_frames, std::size_t bits_per_pulse,
                                 const ChannelConfig& channel,
                                 std::optional<EveStrategy> eve, double disclose_fraction,
                                 Seed seed);

}  // namespace qsec
