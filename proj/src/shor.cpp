#include "qsec/shor.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsec/errors.hpp"

namespace qsec {

namespace {

// period-finding shots per base before giving up on it
constexpr int kMaxPeriodSamples = 10;

std::size_t ceil_log2(std::uint64_t n) {
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

void require_coprime_base(std::uint64_t base, std::uint64_t modulus, const char* who) {
    if (modulus < 3) throw std::invalid_argument(std::string(who) + ": modulus must be >= 3");
    if (base < 2 || base >= modulus)
        throw std::invalid_argument(std::string(who) + ": base must lie in [2, modulus)");
    if (std::gcd(base, modulus) != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": base shares a factor with the modulus "
                                    "(take the gcd shortcut instead)");
}

// Joint state sum_x |x>|base^x mod modulus> / sqrt(2^t) with the QFT already
// applied to R1.
StateVector build_period_state(std::uint64_t base, std::uint64_t modulus, std::size_t cap) {
    const std::size_t r2_bits = ceil_log2(modulus);
    const std::size_t t = 2 * r2_bits;
    const std::size_t total = t + r2_bits;
    if (total > cap)
        throw ResourceError("quantum_period_finding: needs " + std::to_string(total) +
                            " qubits, above the statevector cap of " + std::to_string(cap) +
                            "; use the classical backend");

    StateVector sv(total, cap);
    const GateMatrix h = GateMatrix::hadamard();
    for (std::size_t q = 0; q < t; ++q) sv.apply_gate(h, {q});

    // coherent modular exponentiation as a basis-state permutation:
    // |x>|0> -> |x>|base^x mod modulus>. base^x mod modulus is never zero for
    // a coprime base, so source and destination never alias.
    auto amps = sv.mutable_amplitudes();
    const std::uint64_t r1_count = std::uint64_t{1} << t;
    std::uint64_t f = 1;  // base^x mod modulus, updated incrementally
    for (std::uint64_t x = 0; x < r1_count; ++x) {
        const std::uint64_t src = x << r2_bits;
        const c64 amp = amps[src];
        amps[src] = c64{0.0, 0.0};
        amps[src | f] = amp;
        f = mod_mul(f, base, modulus);
    }

    sv.apply_qft(QubitRange{0, t});
    return sv;
}

std::vector<Fraction> continued_fraction_convergents(std::uint64_t numerator,
                                                     std::uint64_t denominator) {
    std::vector<std::uint64_t> terms;
    std::uint64_t n = numerator, d = denominator;
    while (d != 0) {
        terms.push_back(n / d);
        const std::uint64_t r = n % d;
        n = d;
        d = r;
    }
    std::vector<Fraction> out;
    std::uint64_t h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (const std::uint64_t a : terms) {
        const std::uint64_t h = a * h1 + h2;
        const std::uint64_t k = a * k1 + k2;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        out.push_back(Fraction{h, k});
    }
    return out;
}

PeriodSample postprocess_measurement(std::uint64_t measured, std::size_t t,
                                     std::uint64_t base, std::uint64_t modulus) {
    PeriodSample sample;
    sample.measured = measured;
    sample.t_bits = t;
    sample.convergents =
        continued_fraction_convergents(measured, std::uint64_t{1} << t);
    for (const Fraction& c : sample.convergents) {
        if (c.denominator >= 1 && c.denominator <= modulus &&
            mod_pow(base, c.denominator, modulus) == 1) {
            sample.candidate_r = c.denominator;
            break;
        }
    }
    return sample;
}

PeriodSample sample_period(std::uint64_t base, std::uint64_t modulus, RngStream& rng,
                           std::size_t cap) {
    StateVector sv = build_period_state(base, modulus, cap);
    const std::size_t t = 2 * ceil_log2(modulus);
    const MeasureResult m = sv.measure(QubitRange{0, t}, rng);
    return postprocess_measurement(m.value, t, base, modulus);
}

}  // namespace

const char* attempt_outcome_name(AttemptOutcome outcome) {
    switch (outcome) {
        case AttemptOutcome::GcdShortcut: return "GCD_SHORTCUT";
        case AttemptOutcome::FactorsFound: return "FACTORS_FOUND";
        case AttemptOutcome::OddPeriod: return "ODD_PERIOD";
        case AttemptOutcome::TrivialRoot: return "TRIVIAL_ROOT";
        case AttemptOutcome::Degenerate: return "DEGENERATE";
        case AttemptOutcome::PeriodNotFound: return "PERIOD_NOT_FOUND";
    }
    return "?";
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    std::uint64_t result = 1 % modulus;
    std::uint64_t b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = mod_mul(result, b, modulus);
        b = mod_mul(b, b, modulus);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t classical_order(std::uint64_t base, std::uint64_t modulus) {
    require_coprime_base(base, modulus, "classical_order");
    std::uint64_t r = 1;
    std::uint64_t v = base % modulus;
    while (v != 1) {
        v = mod_mul(v, base, modulus);
        ++r;
    }
    return r;
}

CandidateResult check_candidate(std::uint64_t base, std::uint64_t modulus,
                                std::uint64_t period) {
    if (modulus < 3) throw std::invalid_argument("check_candidate: modulus must be >= 3");
    if (period == 0 || mod_pow(base, period, modulus) != 1)
        throw std::invalid_argument("check_candidate: base^period != 1 (mod modulus)");
    if (period % 2 != 0) return CandidateRejection::OddPeriod;
    const std::uint64_t x = mod_pow(base, period / 2, modulus);
    if (x == modulus - 1) return CandidateRejection::TrivialRoot;
    const std::uint64_t p = std::gcd(x - 1, modulus);
    const std::uint64_t q = std::gcd(x + 1, modulus);
    if (p <= 1 || p >= modulus || q <= 1 || q >= modulus || p * q != modulus)
        return CandidateRejection::Degenerate;
    return std::make_pair(p, q);
}

PeriodSample quantum_period_finding(std::uint64_t base, std::uint64_t modulus, Seed seed,
                                    std::size_t cap) {
    require_coprime_base(base, modulus, "quantum_period_finding");
    RngStream rng(seed);
    return sample_period(base, modulus, rng, cap);
}

std::vector<double> period_finding_distribution(std::uint64_t base, std::uint64_t modulus,
                                                std::size_t cap) {
    require_coprime_base(base, modulus, "period_finding_distribution");
    const StateVector sv = build_period_state(base, modulus, cap);
    return sv.register_distribution(QubitRange{0, 2 * ceil_log2(modulus)});
}

FactorizationResult shor_factor(std::uint64_t n, ShorBackend backend, Seed seed,
                                std::uint32_t max_attempts, std::size_t cap) {
    if (n < 3) throw std::invalid_argument("shor_factor: n must be >= 3");

    FactorizationResult result;
    result.n = n;
    result.backend = backend;

    auto accept = [&](std::uint64_t p, std::uint64_t q) {
        if (p > q) std::swap(p, q);
        if (p <= 1 || q >= n || p * q != n)
            throw ConsistencyError("shor_factor: factor soundness check failed");
        result.factors = std::make_pair(p, q);
    };

    if (n % 2 == 0) {
        accept(2, n / 2);
        return result;
    }

    RngStream rng(seed);
    for (std::uint32_t attempt = 0; attempt < max_attempts; ++attempt) {
        if (n <= 3) break;  // no base in [2, n-1) to draw
        const std::uint64_t a = 2 + rng.next_below(n - 3);
        const std::uint64_t g = std::gcd(a, n);
        if (g != 1) {
            result.attempts.push_back({a, std::nullopt, AttemptOutcome::GcdShortcut});
            accept(g, n / g);
            return result;
        }

        std::optional<std::uint64_t> r;
        if (backend == ShorBackend::Classical) {
            r = classical_order(a, n);
        } else {
            for (int shot = 0; shot < kMaxPeriodSamples && !r; ++shot)
                r = sample_period(a, n, rng, cap).candidate_r;
        }
        if (!r) {
            result.attempts.push_back({a, std::nullopt, AttemptOutcome::PeriodNotFound});
            continue;
        }

        const CandidateResult check = check_candidate(a, n, *r);
        if (const auto* pq = std::get_if<std::pair<std::uint64_t, std::uint64_t>>(&check)) {
            result.attempts.push_back({a, r, AttemptOutcome::FactorsFound});
            accept(pq->first, pq->second);
            return result;
        }
        switch (std::get<CandidateRejection>(check)) {
            case CandidateRejection::OddPeriod:
                result.attempts.push_back({a, r, AttemptOutcome::OddPeriod});
                break;
            case CandidateRejection::TrivialRoot:
                result.attempts.push_back({a, r, AttemptOutcome::TrivialRoot});
                break;
            case CandidateRejection::Degenerate:
                result.attempts.push_back({a, r, AttemptOutcome::Degenerate});
                break;
        }
    }
    return result;  // factors empty: prime n or unlucky draws
}

}  // namespace qsec
