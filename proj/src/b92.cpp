#include "qsec/b92.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qsec {

PolarizationState alice_prepare(int bit) {
    if (bit == 0) return polar_horizontal();
    if (bit == 1) return polar_diagonal();
    throw std::invalid_argument("alice_prepare: bit must be 0 or 1");
}

std::optional<int> sift_outcome(DetectionOutcome outcome) {
    switch (outcome) {
        case DetectionOutcome::Vertical: return 1;
        case DetectionOutcome::Antidiagonal: return 0;
        default: return std::nullopt;
    }
}

namespace detail {

// Chooses floor(fraction * total) distinct indices via a partial
// Fisher-Yates shuffle, returned sorted.
std::vector<std::uint64_t> sample_disclosure(std::uint64_t total, double fraction,
                                             RngStream& rng) {
    const auto want = static_cast<std::uint64_t>(fraction * static_cast<double>(total));
    std::vector<std::uint64_t> idx(total);
    std::iota(idx.begin(), idx.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < want; ++i) {
        const std::uint64_t j = i + rng.next_below(total - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace detail

SessionResult run_b92_session(std::uint64_t n_pulses, const ChannelConfig& channel,
                              std::optional<EveStrategy> eve, double disclose_fraction,
                              Seed seed) {
    if (n_pulses == 0) throw std::invalid_argument("run_b92_session: need at least one pulse");
    if (!(disclose_fraction >= 0.0 && disclose_fraction < 1.0))
        throw std::invalid_argument("run_b92_session: disclose_fraction must lie in [0, 1)");

    RngStream rng(seed);
    std::string alice_sifted;
    std::string bob_sifted;
    for (std::uint64_t i = 0; i < n_pulses; ++i) {
        const int alice_bit = rng.next_bit() ? 1 : 0;
        PolarizationState photon = rotate_state(alice_prepare(alice_bit), channel.theta());
        if (eve) photon = apply_eve(photon, *eve, rng);
        const Basis basis = rng.next_bit() ? Basis::Cross : Basis::Plus;
        const auto bob_bit = sift_outcome(bob_measure(photon, basis, rng));
        if (!bob_bit) continue;
        alice_sifted.push_back(alice_bit ? '1' : '0');
        bob_sifted.push_back(*bob_bit ? '1' : '0');
    }

    SessionResult result;
    result.pulses_sent = n_pulses;
    result.conclusive_count = alice_sifted.size();
    result.sifting_rate =
        static_cast<double>(result.conclusive_count) / static_cast<double>(n_pulses);

    const auto disclosed =
        detail::sample_disclosure(result.conclusive_count, disclose_fraction, rng);
    result.disclosed_count = disclosed.size();

    std::uint64_t mismatches = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < alice_sifted.size(); ++i) {
        if (next < disclosed.size() && disclosed[next] == i) {
            if (alice_sifted[i] != bob_sifted[i]) ++mismatches;
            ++next;
        } else {
            result.alice_key.push_back(alice_sifted[i]);
            result.bob_key.push_back(bob_sifted[i]);
        }
    }

    if (result.disclosed_count > 0) {
        result.qber_estimate = static_cast<double>(mismatches) /
                               static_cast<double>(result.disclosed_count);
        result.eve_detected = detect_eavesdropping(
            result.qber_estimate, expected_no_eve_qber(channel.epsilon()),
            result.disclosed_count);
    }
    return result;
}

}  // namespace qsec
