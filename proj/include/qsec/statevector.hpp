// Minimal dense statevector simulator: basis-state construction, arbitrary
// k-qubit unitaries, the quantum Fourier transform and Born-rule measurement
// with collapse.
//
// Qubit ordering convention, used everywhere in this project: qubit 0 is the
// MOST significant bit of a basis-state index, so |q0 q1 ... q_{n-1}> lives
// at index q0*2^{n-1} + q1*2^{n-2} + ... + q_{n-1}.
#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qsec/rng.hpp"

namespace qsec {

using c64 = std::complex<double>;

// Default ceiling for full-amplitude simulation (2^24 amplitudes ~ 256 MiB
// as complex doubles); overridable per run.
inline constexpr std::size_t kDefaultQubitCap = 24;

inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kProbabilityTol = 1e-6;

// Dense unitary acting on log2(dimension) qubits. Unitarity (max-norm of
// G G† - I below kUnitaryTol) is checked on construction.
class GateMatrix {
public:
    GateMatrix(std::size_t dimension, std::vector<c64> entries);

    std::size_t dimension() const { return dim_; }
    const c64& at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }

    GateMatrix adjoint() const;

    static GateMatrix identity(std::size_t dimension);
    static GateMatrix hadamard();
    static GateMatrix pauli_x();
    static GateMatrix pauli_y();
    static GateMatrix pauli_z();
    static GateMatrix phase(double angle);  // diag(1, e^{i angle})
    // Discrete Fourier unitary, F[r][c] = exp(2*pi*i*r*c/d) / sqrt(d).
    static GateMatrix fourier(std::size_t dimension);

private:
    std::size_t dim_;
    std::vector<c64> m_;  // row-major
};

// Contiguous run of qubits [first, first + count).
struct QubitRange {
    std::size_t first = 0;
    std::size_t count = 0;
};

struct MeasureResult {
    std::uint64_t value = 0;  // register readout; the register's first qubit is the MSB
    std::string bits;         // the same value as a '0'/'1' string
};

class StateVector {
public:
    // |0...0> on n_qubits qubits. Throws ResourceError when n_qubits exceeds
    // the cap, std::invalid_argument for n_qubits == 0.
    explicit StateVector(std::size_t n_qubits, std::size_t cap = kDefaultQubitCap);

    std::size_t n_qubits() const { return n_; }
    std::size_t dimension() const { return amps_.size(); }

    std::span<const c64> amplitudes() const { return amps_; }
    // Direct amplitude access for basis-permutation shortcuts (e.g. coherent
    // modular exponentiation). Callers are responsible for keeping the state
    // normalized.
    std::span<c64> mutable_amplitudes() { return amps_; }

    double norm_sq() const;
    double probability(std::uint64_t basis_index) const { return std::norm(amps_[basis_index]); }
    c64 inner_product(const StateVector& other) const;

    // Applies g to the given target qubits; targets[0] indexes the most
    // significant bit of the gate's local space. Targets must be distinct
    // and in range.
    void apply_gate(const GateMatrix& g, std::span<const std::size_t> targets);
    void apply_gate(const GateMatrix& g, std::initializer_list<std::size_t> targets);

    // Standard discrete-Fourier unitary of size 2^range.count applied to the
    // register (inverse = adjoint). Implemented as a radix-2 transform per
    // register slice, equivalent to applying GateMatrix::fourier densely.
    void apply_qft(QubitRange range, bool inverse = false);

    // Born-rule readout of a register: samples an outcome from the marginal
    // distribution, collapses the state and renormalizes. Throws
    // ConsistencyError if the total probability drifted from 1 by more than
    // kProbabilityTol.
    MeasureResult measure(QubitRange range, RngStream& rng);

    // Marginal readout distribution of a register, without collapsing.
    std::vector<double> register_distribution(QubitRange range) const;

    void renormalize();

private:
    void check_range(QubitRange range) const;

    std::size_t n_;
    std::vector<c64> amps_;
};

std::string format_bits(std::uint64_t value, std::size_t width);

// State equality modulo global phase: |<a|b>| = 1 within tol.
bool approx_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = 1e-9);

}  // namespace qsec
