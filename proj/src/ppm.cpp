#include "qsec/ppm.hpp"

#include <stdexcept>
#include <vector>

namespace qsec {

std::uint64_t ppm_encode(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("ppm_encode: empty bit pattern");
    if (bits.size() > 63) throw std::invalid_argument("ppm_encode: pattern too long");
    std::uint64_t slot = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("ppm_encode: pattern must be '0'/'1' characters");
        slot = (slot << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return slot;
}

std::string ppm_decode(std::uint64_t slot, std::size_t bits_per_pulse) {
    if (bits_per_pulse == 0 || bits_per_pulse > 63)
        throw std::invalid_argument("ppm_decode: bits_per_pulse must lie in [1, 63]");
    if (slot >= (std::uint64_t{1} << bits_per_pulse))
        throw std::invalid_argument("ppm_decode: slot index out of range");
    std::string bits(bits_per_pulse, '0');
    for (std::size_t i = 0; i < bits_per_pulse; ++i)
        if (slot & (std::uint64_t{1} << (bits_per_pulse - 1 - i))) bits[i] = '1';
    return bits;
}

PpmSessionResult run_ppm_session(std::uint64_t n_frames, std::size_t bits_per_pulse,
                                 const ChannelConfig& channel,
                                 std::optional<EveStrategy> eve, double disclose_fraction,
                                 Seed seed) {
    if (n_frames == 0) throw std::invalid_argument("run_ppm_session: need at least one frame");
    if (bits_per_pulse == 0 || bits_per_pulse > 16)
        throw std::invalid_argument("run_ppm_session: bits_per_pulse must lie in [1, 16]");
    if (!(disclose_fraction >= 0.0 && disclose_fraction < 1.0))
        throw std::invalid_argument("run_ppm_session: disclose_fraction must lie in [0, 1)");

    const std::uint64_t n_slots = std::uint64_t{1} << bits_per_pulse;
    RngStream rng(seed);

    struct KeptFrame {
        std::uint64_t slot;
        char alice_pol;  // polarization bit Alice encoded
        char bob_pol;    // bit Bob's conclusive outcome implies
    };
    std::vector<KeptFrame> kept;
    for (std::uint64_t i = 0; i < n_frames; ++i) {
        PpmFrame frame;
        frame.bits_per_pulse = bits_per_pulse;
        frame.n_slots = n_slots;
        frame.occupied_slot = rng.next_below(n_slots);
        const int pol_bit = rng.next_bit() ? 1 : 0;
        frame.pulse = rotate_state(alice_prepare(pol_bit), channel.theta());
        if (eve) frame.pulse = apply_eve(frame.pulse, *eve, rng);
        const Basis basis = rng.next_bit() ? Basis::Cross : Basis::Plus;
        const auto bob_bit = sift_outcome(bob_measure(frame.pulse, basis, rng));
        if (!bob_bit) continue;
        kept.push_back({frame.occupied_slot, static_cast<char>('0' + pol_bit),
                        static_cast<char>('0' + *bob_bit)});
    }

    PpmSessionResult result;
    result.bits_per_pulse = bits_per_pulse;
    result.n_slots = n_slots;
    auto& s = result.session;
    s.pulses_sent = n_frames;
    s.conclusive_count = kept.size();
    s.sifting_rate = static_cast<double>(kept.size()) / static_cast<double>(n_frames);

    const auto disclosed = detail::sample_disclosure(kept.size(), disclose_fraction, rng);
    s.disclosed_count = disclosed.size();

    std::uint64_t mismatches = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (next < disclosed.size() && disclosed[next] == i) {
            if (kept[i].alice_pol != kept[i].bob_pol) ++mismatches;
            ++next;
        } else {
            const std::string bits = ppm_decode(kept[i].slot, bits_per_pulse);
            s.alice_key += bits;
            s.bob_key += bits;  // slot timing is classical: Bob reads it directly
        }
    }

    if (s.disclosed_count > 0) {
        s.qber_estimate =
            static_cast<double>(mismatches) / static_cast<double>(s.disclosed_count);
        s.eve_detected = detect_eavesdropping(
            s.qber_estimate, expected_no_eve_qber(channel.epsilon()), s.disclosed_count);
    }
    return result;
}

}  // namespace qsec
