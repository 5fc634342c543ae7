// JSON and CSV serialization of result types. JSON follows the nlohmann ADL
// convention so result structs convert with plain assignment; field names
// match the struct members one to one.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qsec/b92.hpp"
#include "qsec/grover.hpp"
#include "qsec/noise.hpp"
#include "qsec/ppm.hpp"
#include "qsec/saes.hpp"
#include "qsec/shor.hpp"

namespace qsec {

void to_json(nlohmann::json& j, const SessionResult& r);
void to_json(nlohmann::json& j, const PpmSessionResult& r);
void to_json(nlohmann::json& j, const BerTriple& b);
void to_json(nlohmann::json& j, const QberEstimate& q);
void to_json(nlohmann::json& j, const GroverPlan& p);
void to_json(nlohmann::json& j, const GroverRun& r);
void to_json(nlohmann::json& j, const KeySearchReport& r);
void to_json(nlohmann::json& j, const FactorAttempt& a);
void to_json(nlohmann::json& j, const FactorizationResult& r);

// 0x-prefixed, zero-padded 4-digit hex (S-AES keys and blocks).
std::string format_hex4(std::uint16_t value);

// CSV "epsilon,ber0,ber1,ber2", one 6-decimal row per grid point over
// [eps_min, eps_max] inclusive.
void write_noise_sweep_csv(std::ostream& os, double eps_min, double eps_max, int steps);

// CSV "iteration,marked_mass" from a statevector run's history.
void write_grover_history_csv(std::ostream& os, const std::vector<double>& history);

}  // namespace qsec
