// Grover search with two interchangeable backends: a full statevector run
// for desk-scale bit widths and closed-form marked/unmarked subspace
// amplitudes for any width, plus the iteration planner and the symmetric-key
// security-halving rule.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsec/rng.hpp"
#include "qsec/statevector.hpp"

namespace qsec {

// Search predicate over n_bits-wide values. marked_count is the number of
// solutions; at desk scale it is verifiable by enumeration.
struct Oracle {
    std::size_t n_bits = 0;
    std::function<bool(std::uint64_t)> predicate;
    std::uint64_t marked_count = 0;
};

Oracle make_single_target_oracle(std::size_t n_bits, std::uint64_t target);

struct GroverPlan {
    std::size_t n_bits = 0;
    std::uint64_t marked_count = 0;
    std::uint64_t iterations = 0;
    double predicted_success = 0.0;
};

// k = floor(pi/4 * sqrt(2^n / M)) and the closed-form success probability
// sin^2((2k+1) asin(sqrt(M/2^n))) at that k. Valid for n_bits <= 128.
GroverPlan plan_iterations(std::size_t n_bits, std::uint64_t marked_count);

struct GroverRun {
    std::uint64_t measured_value = 0;
    std::string measured_bits;
    double success_probability = 0.0;  // exact marked mass before measurement
    // marked mass after each iteration; [0] is the uniform-superposition mass
    std::vector<double> marked_mass_history;
    std::uint64_t oracle_queries = 0;
};

// Full statevector run: Hadamards on every qubit, then `iterations` rounds of
// phase-flip oracle plus inversion-about-mean diffusion, then a full
// measurement. Throws ResourceError above the cap (use the subspace backend).
GroverRun grover_statevector(const Oracle& oracle, std::uint64_t iterations, Seed seed,
                             std::size_t cap = kDefaultQubitCap);

// Closed-form success probability in the 2-dimensional marked/unmarked span;
// no width cap (usable at n_bits = 128).
double grover_subspace(std::size_t n_bits, std::uint64_t marked_count,
                       std::uint64_t iterations);

struct SubspaceAmplitudes {
    double marked = 0.0;
    double unmarked = 0.0;
};

// Exact per-iteration (marked, unmarked) amplitude pairs via the two-term
// rotation recurrence; entry [0] is the uniform superposition. Iteration
// counts are limited to desk scale (the closed form covers the rest).
std::vector<SubspaceAmplitudes> grover_subspace_trajectory(std::size_t n_bits,
                                                           std::uint64_t marked_count,
                                                           std::uint64_t iterations);

// Grover halves symmetric-key security: key_bits must be even and >= 2.
std::size_t effective_security_bits(std::size_t key_bits);

}  // namespace qsec
