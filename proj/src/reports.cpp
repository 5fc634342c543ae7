#include "qsec/reports.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qsec {

void to_json(nlohmann::json& j, const SessionResult& r) {
    j = nlohmann::json{
        {"pulses_sent", r.pulses_sent},
        {"conclusive_count", r.conclusive_count},
        {"sifting_rate", r.sifting_rate},
        {"alice_key", r.alice_key},
        {"bob_key", r.bob_key},
        {"qber_estimate", r.qber_estimate},
        {"disclosed_count", r.disclosed_count},
        {"eve_detected", r.eve_detected},
    };
}

void to_json(nlohmann::json& j, const PpmSessionResult& r) {
    to_json(j, r.session);
    j["bits_per_pulse"] = r.bits_per_pulse;
    j["n_slots"] = r.n_slots;
}

void to_json(nlohmann::json& j, const BerTriple& b) {
    j = nlohmann::json{{"ber0", b.ber0}, {"ber1", b.ber1}, {"ber2", b.ber2}};
}

void to_json(nlohmann::json& j, const QberEstimate& q) {
    j = nlohmann::json{
        {"qber", q.qber},
        {"std_error", q.std_error},
        {"conclusive_count", q.conclusive_count},
        {"pulses", q.pulses},
    };
}

void to_json(nlohmann::json& j, const GroverPlan& p) {
    j = nlohmann::json{
        {"n_bits", p.n_bits},
        {"marked_count", p.marked_count},
        {"iterations", p.iterations},
        {"predicted_success", p.predicted_success},
    };
}

void to_json(nlohmann::json& j, const GroverRun& r) {
    j = nlohmann::json{
        {"measured_value", r.measured_value},
        {"measured_bits", r.measured_bits},
        {"success_probability", r.success_probability},
        {"oracle_queries", r.oracle_queries},
    };
}

void to_json(nlohmann::json& j, const KeySearchReport& r) {
    nlohmann::json keys = nlohmann::json::array();
    for (const SaesKey k : r.matching_keys) keys.push_back(format_hex4(k));
    j = nlohmann::json{
        {"matching_keys", std::move(keys)},
        {"method", r.method == KeySearchMethod::Exhaustive ? "EXHAUSTIVE" : "GROVER_SIM"},
        {"oracle_queries", r.oracle_queries},
        {"grover_iterations", r.grover_iterations},
        {"predicted_success", r.predicted_success},
    };
}

void to_json(nlohmann::json& j, const FactorAttempt& a) {
    j = nlohmann::json{
        {"a", a.base},
        {"r", a.period ? nlohmann::json(*a.period) : nlohmann::json(nullptr)},
        {"outcome", attempt_outcome_name(a.outcome)},
    };
}

void to_json(nlohmann::json& j, const FactorizationResult& r) {
    j = nlohmann::json{
        {"n", r.n},
        {"backend", r.backend == ShorBackend::Classical ? "CLASSICAL" : "QUANTUM_SIM"},
        {"attempts", r.attempts},
        {"factors", r.factors
                        ? nlohmann::json::array({r.factors->first, r.factors->second})
                        : nlohmann::json(nullptr)},
    };
}

std::string format_hex4(std::uint16_t value) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "0x%04x", value);
    return buf;
}

void write_noise_sweep_csv(std::ostream& os, double eps_min, double eps_max, int steps) {
    if (!(eps_min >= 0.0 && eps_min < eps_max && eps_max <= 1.0))
        throw std::invalid_argument("noise sweep: need 0 <= eps_min < eps_max <= 1");
    if (steps < 2) throw std::invalid_argument("noise sweep: need at least 2 steps");
    os << "epsilon,ber0,ber1,ber2\n";
    char row[96];
    for (int i = 0; i < steps; ++i) {
        const double eps =
            eps_min + (eps_max - eps_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        const BerTriple b = analytic_ber(eps);
        std::snprintf(row, sizeof(row), "%.6f,%.6f,%.6f,%.6f\n", eps, b.ber0, b.ber1, b.ber2);
        os << row;
    }
}

void write_grover_history_csv(std::ostream& os, const std::vector<double>& history) {
    os << "iteration,marked_mass\n";
    char row[64];
    for (std::size_t i = 0; i < history.size(); ++i) {
        std::snprintf(row, sizeof(row), "%zu,%.9f\n", i, history[i]);
        os << row;
    }
}

}  // namespace qsec
