#include "qsec/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsec/errors.hpp"

namespace qsec {

namespace {

// M / 2^n as a double, valid for any n_bits (2^n overflows integers past 63).
double marked_ratio(std::size_t n_bits, std::uint64_t marked_count) {
    if (n_bits == 0 || n_bits > 128)
        throw std::invalid_argument("grover: n_bits must lie in [1, 128]");
    if (marked_count == 0)
        throw std::invalid_argument("grover: marked_count must be positive (nothing to find)");
    const double ratio =
        static_cast<double>(marked_count) * std::exp2(-static_cast<double>(n_bits));
    if (ratio > 1.0 + 1e-12)
        throw std::invalid_argument("grover: marked_count exceeds the search space");
    return std::min(ratio, 1.0);
}

double grover_angle(std::size_t n_bits, std::uint64_t marked_count) {
    return std::asin(std::sqrt(marked_ratio(n_bits, marked_count)));
}

}  // namespace

Oracle make_single_target_oracle(std::size_t n_bits, std::uint64_t target) {
    if (n_bits == 0 || n_bits > 63)
        throw std::invalid_argument("oracle: n_bits must lie in [1, 63]");
    if (target >= (std::uint64_t{1} << n_bits))
        throw std::invalid_argument("oracle: target outside the search space");
    return Oracle{n_bits, [target](std::uint64_t x) { return x == target; }, 1};
}

GroverPlan plan_iterations(std::size_t n_bits, std::uint64_t marked_count) {
    const double ratio = marked_ratio(n_bits, marked_count);
    const double k_real = std::numbers::pi / 4.0 / std::sqrt(ratio);
    const auto k = static_cast<std::uint64_t>(std::floor(k_real));
    return GroverPlan{n_bits, marked_count, k, grover_subspace(n_bits, marked_count, k)};
}

GroverRun grover_statevector(const Oracle& oracle, std::uint64_t iterations, Seed seed,
                             std::size_t cap) {
    if (oracle.n_bits == 0) throw std::invalid_argument("grover: oracle needs n_bits >= 1");
    if (!oracle.predicate) throw std::invalid_argument("grover: oracle predicate is empty");
    if (oracle.n_bits > cap)
        throw ResourceError("grover: " + std::to_string(oracle.n_bits) +
                            " bits exceeds the statevector cap of " + std::to_string(cap) +
                            "; use the subspace backend");

    StateVector sv(oracle.n_bits, cap);
    const GateMatrix h = GateMatrix::hadamard();
    for (std::size_t q = 0; q < oracle.n_bits; ++q) sv.apply_gate(h, {q});

    const std::uint64_t dim = sv.dimension();
    std::vector<bool> marked(dim);
    for (std::uint64_t x = 0; x < dim; ++x) marked[x] = oracle.predicate(x);

    auto marked_mass = [&] {
        double mass = 0.0;
        for (std::uint64_t x = 0; x < dim; ++x)
            if (marked[x]) mass += sv.probability(x);
        return mass;
    };

    GroverRun run;
    run.marked_mass_history.reserve(iterations + 1);
    run.marked_mass_history.push_back(marked_mass());

    auto amps = sv.mutable_amplitudes();
    for (std::uint64_t it = 0; it < iterations; ++it) {
        // phase oracle: flip the sign of every marked amplitude
        for (std::uint64_t x = 0; x < dim; ++x)
            if (marked[x]) amps[x] = -amps[x];
        // diffusion 2|s><s| - I: inversion about the mean amplitude
        c64 sum{0.0, 0.0};
        for (const auto& a : amps) sum += a;
        const c64 mean = sum / static_cast<double>(dim);
        for (auto& a : amps) a = 2.0 * mean - a;
        run.marked_mass_history.push_back(marked_mass());
    }
    run.oracle_queries = iterations;
    run.success_probability = run.marked_mass_history.back();

    RngStream rng(seed);
    const MeasureResult m = sv.measure(QubitRange{0, oracle.n_bits}, rng);
    run.measured_value = m.value;
    run.measured_bits = m.bits;
    return run;
}

double grover_subspace(std::size_t n_bits, std::uint64_t marked_count,
                       std::uint64_t iterations) {
    const double theta = grover_angle(n_bits, marked_count);
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
    return s * s;
}

std::vector<SubspaceAmplitudes> grover_subspace_trajectory(std::size_t n_bits,
                                                           std::uint64_t marked_count,
                                                           std::uint64_t iterations) {
    if (iterations > (std::uint64_t{1} << 22))
        throw std::invalid_argument(
            "grover_subspace_trajectory: iteration count beyond desk scale; "
            "use the closed form");
    const double theta = grover_angle(n_bits, marked_count);
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    std::vector<SubspaceAmplitudes> traj;
    traj.reserve(iterations + 1);
    double a = std::sin(theta);  // amplitude on the uniform marked state
    double b = std::cos(theta);  // amplitude on the uniform unmarked state
    traj.push_back({a, b});
    for (std::uint64_t k = 0; k < iterations; ++k) {
        const double na = c2 * a + s2 * b;
        const double nb = c2 * b - s2 * a;
        a = na;
        b = nb;
        traj.push_back({a, b});
    }
    return traj;
}

std::size_t effective_security_bits(std::size_t key_bits) {
    if (key_bits < 2 || key_bits % 2 != 0)
        throw std::invalid_argument("effective_security_bits: key_bits must be even and >= 2");
    return key_bits / 2;
}

}  // namespace qsec
