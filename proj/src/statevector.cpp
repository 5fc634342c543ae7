#include "qsec/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qsec/errors.hpp"

namespace qsec {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// In-place DFT of a power-of-two block. positive_sign selects the
// exp(+2*pi*i/N) kernel (the QFT convention); the result is scaled by
// 1/sqrt(N) so the transform is unitary.
void dft_pow2(std::vector<c64>& a, bool positive_sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (positive_sign ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const c64 step = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            c64 w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const c64 u = a[i + j];
                const c64 v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= step;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& x : a) x *= scale;
}

}  // namespace

GateMatrix::GateMatrix(std::size_t dimension, std::vector<c64> entries)
    : dim_(dimension), m_(std::move(entries)) {
    if (!is_power_of_two(dim_))
        throw std::invalid_argument("GateMatrix: dimension must be a power of two");
    if (m_.size() != dim_ * dim_)
        throw std::invalid_argument("GateMatrix: entry count does not match dimension");
    // ||G G† - I||_max
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            c64 dot{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) dot += at(r, k) * std::conj(at(c, k));
            if (r == c) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    if (worst > kUnitaryTol)
        throw std::invalid_argument("GateMatrix: matrix is not unitary");
}

GateMatrix GateMatrix::adjoint() const {
    std::vector<c64> out(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out[c * dim_ + r] = std::conj(at(r, c));
    return GateMatrix(dim_, std::move(out));
}

GateMatrix GateMatrix::identity(std::size_t dimension) {
    std::vector<c64> m(dimension * dimension, c64{0.0, 0.0});
    for (std::size_t i = 0; i < dimension; ++i) m[i * dimension + i] = 1.0;
    return GateMatrix(dimension, std::move(m));
}

GateMatrix GateMatrix::hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return GateMatrix(2, {c64{s, 0}, c64{s, 0}, c64{s, 0}, c64{-s, 0}});
}

GateMatrix GateMatrix::pauli_x() {
    return GateMatrix(2, {c64{0, 0}, c64{1, 0}, c64{1, 0}, c64{0, 0}});
}

GateMatrix GateMatrix::pauli_y() {
    return GateMatrix(2, {c64{0, 0}, c64{0, -1}, c64{0, 1}, c64{0, 0}});
}

GateMatrix GateMatrix::pauli_z() {
    return GateMatrix(2, {c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{-1, 0}});
}

GateMatrix GateMatrix::phase(double angle) {
    return GateMatrix(2, {c64{1, 0}, c64{0, 0}, c64{0, 0}, std::polar(1.0, angle)});
}

GateMatrix GateMatrix::fourier(std::size_t dimension) {
    if (!is_power_of_two(dimension))
        throw std::invalid_argument("fourier: dimension must be a power of two");
    std::vector<c64> m(dimension * dimension);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));
    for (std::size_t r = 0; r < dimension; ++r) {
        for (std::size_t c = 0; c < dimension; ++c) {
            const double ang = 2.0 * std::numbers::pi *
                               static_cast<double>((r * c) % dimension) /
                               static_cast<double>(dimension);
            m[r * dimension + c] = std::polar(scale, ang);
        }
    }
    return GateMatrix(dimension, std::move(m));
}

StateVector::StateVector(std::size_t n_qubits, std::size_t cap) : n_(n_qubits) {
    if (n_qubits == 0) throw std::invalid_argument("StateVector: need at least one qubit");
    if (n_qubits > cap)
        throw ResourceError("StateVector: " + std::to_string(n_qubits) +
                            " qubits exceeds the statevector cap of " + std::to_string(cap));
    amps_.assign(std::size_t{1} << n_, c64{0.0, 0.0});
    amps_[0] = c64{1.0, 0.0};
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

c64 StateVector::inner_product(const StateVector& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("inner_product: qubit counts differ");
    c64 acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i)
        acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

void StateVector::apply_gate(const GateMatrix& g, std::span<const std::size_t> targets) {
    const std::size_t k = targets.size();
    if (k == 0) throw std::invalid_argument("apply_gate: no target qubits");
    if (k >= 64 || g.dimension() != (std::size_t{1} << k))
        throw std::invalid_argument("apply_gate: gate dimension does not match target count");

    std::uint64_t mask = 0;
    std::vector<std::uint64_t> bit(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t q = targets[i];
        if (q >= n_) throw std::invalid_argument("apply_gate: target qubit out of range");
        const std::uint64_t b = std::uint64_t{1} << (n_ - 1 - q);
        if (mask & b) throw std::invalid_argument("apply_gate: duplicate target qubit");
        mask |= b;
        bit[i] = b;
    }

    if (k == 1) {
        // hot path: single-qubit gate
        const c64 g00 = g.at(0, 0), g01 = g.at(0, 1), g10 = g.at(1, 0), g11 = g.at(1, 1);
        const std::uint64_t b = bit[0];
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            if (i & b) continue;
            const c64 a0 = amps_[i];
            const c64 a1 = amps_[i | b];
            amps_[i] = g00 * a0 + g01 * a1;
            amps_[i | b] = g10 * a0 + g11 * a1;
        }
        return;
    }

    const std::size_t d = std::size_t{1} << k;
    // offset[j]: global index bits for gate-local basis state j
    // (bit k-1-i of j corresponds to targets[i])
    std::vector<std::uint64_t> offset(d, 0);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < k; ++i)
            if (j & (std::size_t{1} << (k - 1 - i))) offset[j] |= bit[i];

    std::vector<c64> in(d), out(d);
    for (std::uint64_t base = 0; base < amps_.size(); ++base) {
        if (base & mask) continue;
        for (std::size_t j = 0; j < d; ++j) in[j] = amps_[base | offset[j]];
        for (std::size_t r = 0; r < d; ++r) {
            c64 acc{0.0, 0.0};
            for (std::size_t c = 0; c < d; ++c) acc += g.at(r, c) * in[c];
            out[r] = acc;
        }
        for (std::size_t j = 0; j < d; ++j) amps_[base | offset[j]] = out[j];
    }
}

void StateVector::apply_gate(const GateMatrix& g, std::initializer_list<std::size_t> targets) {
    apply_gate(g, std::span<const std::size_t>(targets.begin(), targets.size()));
}

void StateVector::check_range(QubitRange range) const {
    if (range.count == 0) throw std::invalid_argument("register must not be empty");
    if (range.first + range.count > n_)
        throw std::invalid_argument("register exceeds the qubit count");
}

void StateVector::apply_qft(QubitRange range, bool inverse) {
    check_range(range);
    const std::size_t t = range.count;
    const std::size_t shift = n_ - range.first - t;  // index bits below the register
    const std::size_t field = std::size_t{1} << t;
    const std::uint64_t low_count = std::uint64_t{1} << shift;
    const std::uint64_t high_count = std::uint64_t{1} << range.first;

    std::vector<c64> buf(field);
    for (std::uint64_t hi = 0; hi < high_count; ++hi) {
        for (std::uint64_t lo = 0; lo < low_count; ++lo) {
            const std::uint64_t base = (hi << (t + shift)) | lo;
            for (std::size_t j = 0; j < field; ++j)
                buf[j] = amps_[base | (static_cast<std::uint64_t>(j) << shift)];
            dft_pow2(buf, !inverse);
            for (std::size_t j = 0; j < field; ++j)
                amps_[base | (static_cast<std::uint64_t>(j) << shift)] = buf[j];
        }
    }
}

std::vector<double> StateVector::register_distribution(QubitRange range) const {
    check_range(range);
    const std::size_t shift = n_ - range.first - range.count;
    const std::uint64_t field_mask = (std::uint64_t{1} << range.count) - 1;
    std::vector<double> dist(std::size_t{1} << range.count, 0.0);
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        dist[(i >> shift) & field_mask] += std::norm(amps_[i]);
    return dist;
}

MeasureResult StateVector::measure(QubitRange range, RngStream& rng) {
    const std::vector<double> dist = register_distribution(range);
    const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    if (std::abs(total - 1.0) > kProbabilityTol)
        throw ConsistencyError("measure: register probabilities sum to " + std::to_string(total));

    const double u = rng.next_double() * total;
    std::uint64_t outcome = 0;
    double cum = 0.0;
    bool picked = false;
    for (std::size_t j = 0; j < dist.size(); ++j) {
        cum += dist[j];
        if (u < cum) {
            outcome = j;
            picked = true;
            break;
        }
    }
    if (!picked) {
        // numerical tail: fall back to the last outcome with support
        for (std::size_t j = dist.size(); j-- > 0;) {
            if (dist[j] > 0.0) {
                outcome = j;
                break;
            }
        }
    }

    const std::size_t shift = n_ - range.first - range.count;
    const std::uint64_t field_mask = (std::uint64_t{1} << range.count) - 1;
    const double scale = 1.0 / std::sqrt(dist[outcome]);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i >> shift) & field_mask) == outcome)
            amps_[i] *= scale;
        else
            amps_[i] = c64{0.0, 0.0};
    }
    return MeasureResult{outcome, format_bits(outcome, range.count)};
}

void StateVector::renormalize() {
    const double n2 = norm_sq();
    if (n2 <= 0.0) throw ConsistencyError("renormalize: state has zero norm");
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& a : amps_) a *= scale;
}

std::string format_bits(std::uint64_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (value & (std::uint64_t{1} << (width - 1 - i))) s[i] = '1';
    return s;
}

bool approx_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    return std::abs(std::abs(a.inner_product(b)) - 1.0) <= tol;
}

}  // namespace qsec
