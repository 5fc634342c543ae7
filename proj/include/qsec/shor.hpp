// Shor factorization: the classical four-step procedure with pluggable
// period-finding backends. The classical backend computes orders by iterated
// modular multiplication; the quantum backend simulates the two-register
// circuit (Hadamards, coherent modular exponentiation, QFT, measurement) and
// recovers the period through continued fractions.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qsec/rng.hpp"
#include "qsec/statevector.hpp"

namespace qsec {

enum class ShorBackend { Classical, QuantumSim };

enum class AttemptOutcome {
    GcdShortcut,     // gcd(a, n) > 1 already yields a factor
    FactorsFound,    // period led to a nontrivial factor pair
    OddPeriod,       // r odd, redo with a new base
    TrivialRoot,     // a^(r/2) = -1 mod n
    Degenerate,      // gcds came out trivial
    PeriodNotFound,  // backend produced no verified period for this base
};

const char* attempt_outcome_name(AttemptOutcome outcome);

struct FactorAttempt {
    std::uint64_t base = 0;
    std::optional<std::uint64_t> period;
    AttemptOutcome outcome = AttemptOutcome::PeriodNotFound;
};

struct FactorizationResult {
    std::uint64_t n = 0;
    std::vector<FactorAttempt> attempts;
    // p <= q with p*q = n; empty when no factors were found (prime n or
    // exhausted attempts; the trace lets the caller distinguish)
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
    ShorBackend backend = ShorBackend::Classical;
};

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

// Smallest r >= 1 with base^r = 1 (mod modulus). Requires gcd(base, modulus)
// = 1 and modulus >= 3.
std::uint64_t classical_order(std::uint64_t base, std::uint64_t modulus);

enum class CandidateRejection { OddPeriod, TrivialRoot, Degenerate };

// Either the factor pair (gcd(a^(r/2)-1, n), gcd(a^(r/2)+1, n)) as computed,
// or the reason the candidate period is unusable. Requires a^r = 1 (mod n).
using CandidateResult = std::variant<std::pair<std::uint64_t, std::uint64_t>, CandidateRejection>;

CandidateResult check_candidate(std::uint64_t base, std::uint64_t modulus, std::uint64_t period);

struct Fraction {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

struct PeriodSample {
    std::uint64_t measured = 0;  // readout m of register R1
    std::size_t t_bits = 0;      // R1 width: 2 * ceil(log2 n)
    std::vector<Fraction> convergents;  // of m / 2^t
    // smallest convergent denominator r <= n with base^r = 1 (mod n)
    std::optional<std::uint64_t> candidate_r;
};

// One simulated period-finding shot: R1 (t qubits) in uniform superposition,
// f(x) = base^x mod modulus computed coherently into R2 as a basis-state
// permutation, QFT on R1, measurement, continued-fraction postprocessing.
PeriodSample quantum_period_finding(std::uint64_t base, std::uint64_t modulus, Seed seed,
                                    std::size_t cap = kDefaultQubitCap);

// Exact pre-measurement readout distribution of R1 (for peak-structure
// inspection and plotting).
std::vector<double> period_finding_distribution(std::uint64_t base, std::uint64_t modulus,
                                                std::size_t cap = kDefaultQubitCap);

// Full factorization: even n short-circuits to (2, n/2); otherwise up to
// max_attempts random bases with the gcd shortcut, backend period finding
// and candidate checking. Every attempt lands in the trace.
FactorizationResult shor_factor(std::uint64_t n, ShorBackend backend, Seed seed,
                                std::uint32_t max_attempts = 20,
                                std::size_t cap = kDefaultQubitCap);

}  // namespace qsec
