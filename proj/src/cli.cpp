#include "qsec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsec/b92.hpp"
#include "qsec/errors.hpp"
#include "qsec/grover.hpp"
#include "qsec/noise.hpp"
#include "qsec/ppm.hpp"
#include "qsec/reports.hpp"
#include "qsec/saes.hpp"
#include "qsec/shor.hpp"
#include "qsec/version.hpp"

namespace qsec::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;

// Writes the report envelope (version, command, seed, effective config,
// result) as pretty JSON to --out or the given stream. Re-running the same
// argv reproduces the bytes exactly: nothing time- or host-dependent goes in.
void emit_json(const std::string& command, std::uint64_t seed, json config, json result,
               const std::string& out_path, std::ostream& out) {
    json envelope{
        {"artifact_version", kVersion},
        {"command", command},
        {"seed", seed},
        {"config", std::move(config)},
        {"result", std::move(result)},
    };
    const std::string text = envelope.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw ResourceError("cannot open output file: " + out_path);
        f << text;
        if (!f) throw ResourceError("failed writing output file: " + out_path);
    }
}

struct ChannelOpts {
    double theta = 0.0;
    double epsilon = 0.0;
    CLI::Option* theta_opt = nullptr;
    CLI::Option* epsilon_opt = nullptr;

    void attach(CLI::App& app) {
        theta_opt = app.add_option("--theta", theta, "collective rotation angle in radians");
        epsilon_opt =
            app.add_option("--epsilon", epsilon, "noise parameter sin^2(theta) in [0, 1]");
        theta_opt->excludes(epsilon_opt);
        epsilon_opt->excludes(theta_opt);
    }

    ChannelConfig resolve() const {
        if (epsilon_opt->count() > 0) return ChannelConfig::from_epsilon(epsilon);
        return ChannelConfig(theta);
    }
};

const std::map<std::string, std::optional<EveStrategy>> kEveNames = {
    {"none", std::nullopt},
    {"measured-resend", EveStrategy::MeasuredResend},
    {"conclusive-fixed", EveStrategy::ConclusiveFixed},
};

std::uint16_t parse_u16(const std::string& text, const char* what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos, 0);  // accepts decimal and 0x-prefixed hex
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: " + text);
    }
    if (pos != text.size() || v > 0xFFFF)
        throw std::invalid_argument(std::string(what) + ": must be a 16-bit value: " + text);
    return static_cast<std::uint16_t>(v);
}

json channel_config_json(const ChannelConfig& ch, const std::string& eve) {
    return json{{"theta", ch.theta()}, {"epsilon", ch.epsilon()}, {"eve", eve}};
}

void add_b92(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* sub = app.add_subcommand("b92", "run a B92 key-distribution session");
    auto pulses = std::make_shared<std::uint64_t>(100000);
    auto channel = std::make_shared<ChannelOpts>();
    auto eve = std::make_shared<std::string>("none");
    auto disclose = std::make_shared<double>(0.2);
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    auto out_path = std::make_shared<std::string>();
    sub->add_option("--pulses", *pulses, "number of photons Alice sends");
    channel->attach(*sub);
    sub->add_option("--eve", *eve, "eavesdropper strategy")
        ->check(CLI::IsMember(
            std::vector<std::string>{"none", "measured-resend", "conclusive-fixed"}));
    sub->add_option("--disclose-fraction", *disclose,
                    "fraction of sifted bits disclosed for QBER estimation");
    sub->add_option("--seed", *seed, "master seed");
    sub->add_option("--out", *out_path, "write the JSON report to this file");
    sub->callback([=, &out, &exit_code] {
        const ChannelConfig ch = channel->resolve();
        const SessionResult r =
            run_b92_session(*pulses, ch, kEveNames.at(*eve), *disclose, Seed{*seed, 0});
        json config = channel_config_json(ch, *eve);
        config["pulses"] = *pulses;
        config["disclose_fraction"] = *disclose;
        emit_json("b92", *seed, std::move(config), r, *out_path, out);
        exit_code = 0;
    });
}

void add_ppm(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* sub = app.add_subcommand("ppm", "run the PPM-improved B92 session");
    auto frames = std::make_shared<std::uint64_t>(100000);
    auto bits = std::make_shared<std::size_t>(2);
    auto channel = std::make_shared<ChannelOpts>();
    auto eve = std::make_shared<std::string>("none");
    auto disclose = std::make_shared<double>(0.2);
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    auto out_path = std::make_shared<std::string>();
    sub->add_option("--frames", *frames, "number of PPM frames Alice sends");
    sub->add_option("--bits-per-pulse", *bits, "key bits per frame (2^b time slots)");
    channel->attach(*sub);
    sub->add_option("--eve", *eve, "eavesdropper strategy")
        ->check(CLI::IsMember(
            std::vector<std::string>{"none", "measured-resend", "conclusive-fixed"}));
    sub->add_option("--disclose-fraction", *disclose,
                    "fraction of kept frames disclosed for QBER estimation");
    sub->add_option("--seed", *seed, "master seed");
    sub->add_option("--out", *out_path, "write the JSON report to this file");
    sub->callback([=, &out, &exit_code] {
        const ChannelConfig ch = channel->resolve();
        const PpmSessionResult r =
            run_ppm_session(*frames, *bits, ch, kEveNames.at(*eve), *disclose, Seed{*seed, 0});
        json config = channel_config_json(ch, *eve);
        config["frames"] = *frames;
        config["bits_per_pulse"] = *bits;
        config["disclose_fraction"] = *disclose;
        emit_json("ppm", *seed, std::move(config), r, *out_path, out);
        exit_code = 0;
    });
}

void add_noise(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* noise = app.add_subcommand("noise", "collective-rotation channel analysis");
    noise->require_subcommand(1);

    auto* sweep = noise->add_subcommand("sweep", "emit the analytic ber curves as CSV");
    auto eps_min = std::make_shared<double>(0.0);
    auto eps_max = std::make_shared<double>(0.7);
    auto steps = std::make_shared<int>(71);
    auto sweep_out = std::make_shared<std::string>();
    sweep->add_option("--eps-min", *eps_min, "grid start");
    sweep->add_option("--eps-max", *eps_max, "grid end (inclusive)");
    sweep->add_option("--steps", *steps, "number of grid points");
    sweep->add_option("--out", *sweep_out, "write the CSV to this file");
    sweep->callback([=, &out, &exit_code] {
        if (sweep_out->empty()) {
            write_noise_sweep_csv(out, *eps_min, *eps_max, *steps);
        } else {
            std::ofstream f(*sweep_out);
            if (!f) throw ResourceError("cannot open output file: " + *sweep_out);
            write_noise_sweep_csv(f, *eps_min, *eps_max, *steps);
            if (!f) throw ResourceError("failed writing output file: " + *sweep_out);
        }
        exit_code = 0;
    });

    auto* sim = noise->add_subcommand("simulate", "Monte Carlo QBER under a chosen Eve");
    auto pulses = std::make_shared<std::uint64_t>(100000);
    auto channel = std::make_shared<ChannelOpts>();
    auto eve = std::make_shared<std::string>("none");
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    auto sim_out = std::make_shared<std::string>();
    sim->add_option("--pulses", *pulses, "number of simulated pulses");
    channel->attach(*sim);
    sim->add_option("--eve", *eve, "eavesdropper strategy")
        ->check(CLI::IsMember(
            std::vector<std::string>{"none", "measured-resend", "conclusive-fixed"}));
    sim->add_option("--seed", *seed, "master seed");
    sim->add_option("--out", *sim_out, "write the JSON report to this file");
    sim->callback([=, &out, &exit_code] {
        const ChannelConfig ch = channel->resolve();
        const QberEstimate est =
            simulate_eve_qber(ch.theta(), kEveNames.at(*eve), *pulses, Seed{*seed, 0});
        const double ceiling = expected_no_eve_qber(ch.epsilon());
        json result{
            {"simulated", est},
            {"analytic_ber", analytic_ber(ch.epsilon())},
            {"expected_no_eve_qber", ceiling},
            {"regime", regime_name(classify_regime(ch.epsilon()))},
            {"eve_detected", detect_eavesdropping(est.qber, ceiling, est.conclusive_count)},
        };
        json config = channel_config_json(ch, *eve);
        config["pulses"] = *pulses;
        emit_json("noise simulate", *seed, std::move(config), std::move(result), *sim_out,
                  out);
        exit_code = 0;
    });
}

void add_grover(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* sub = app.add_subcommand("grover", "Grover search for marked bit patterns");
    auto bits = std::make_shared<std::size_t>(0);
    auto targets = std::make_shared<std::vector<std::uint64_t>>();
    auto iterations = std::make_shared<std::uint64_t>(0);
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    auto cap = std::make_shared<std::size_t>(kDefaultQubitCap);
    auto history_out = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    sub->add_option("--bits", *bits, "search-space width in bits")->required();
    sub->add_option("--target", *targets, "marked value (repeatable)")->required();
    auto* iter_opt =
        sub->add_option("--iterations", *iterations, "override the planned iteration count");
    sub->add_option("--seed", *seed, "master seed");
    sub->add_option("--statevector-cap", *cap, "qubit ceiling for the statevector backend");
    sub->add_option("--history-out", *history_out,
                    "write per-iteration marked mass as CSV to this file");
    sub->add_option("--out", *out_path, "write the JSON report to this file");
    sub->callback([=, &out, &exit_code] {
        std::vector<std::uint64_t> marked = *targets;
        std::sort(marked.begin(), marked.end());
        marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
        if (*bits == 0 || *bits > 63)
            throw std::invalid_argument("grover: --bits must lie in [1, 63]");
        for (const std::uint64_t t : marked)
            if (t >= (std::uint64_t{1} << *bits))
                throw std::invalid_argument("grover: --target outside the search space");
        const Oracle oracle{
            *bits,
            [marked](std::uint64_t x) {
                return std::binary_search(marked.begin(), marked.end(), x);
            },
            marked.size()};
        const GroverPlan plan = plan_iterations(*bits, marked.size());
        const std::uint64_t k = iter_opt->count() > 0 ? *iterations : plan.iterations;
        const GroverRun run = grover_statevector(oracle, k, Seed{*seed, 0}, *cap);
        if (!history_out->empty()) {
            std::ofstream f(*history_out);
            if (!f) throw ResourceError("cannot open output file: " + *history_out);
            write_grover_history_csv(f, run.marked_mass_history);
        }
        json result{
            {"plan", plan},
            {"iterations_run", k},
            {"run", run},
            {"subspace_success", grover_subspace(*bits, marked.size(), k)},
        };
        json config{{"bits", *bits}, {"targets", marked}, {"statevector_cap", *cap}};
        emit_json("grover", *seed, std::move(config), std::move(result), *out_path, out);
        exit_code = 0;
    });
}

void add_saes(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* saes = app.add_subcommand("saes", "Simplified-AES key recovery");
    saes->require_subcommand(1);
    auto* sub = saes->add_subcommand("crack", "recover the 16-bit key for a (p, c) pair");
    auto plaintext = std::make_shared<std::string>();
    auto ciphertext = std::make_shared<std::string>();
    auto key = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("grover");
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    auto retries = std::make_shared<std::uint32_t>(8);
    auto out_path = std::make_shared<std::string>();
    sub->add_option("--plaintext", *plaintext, "16-bit plaintext (decimal or 0x hex)")
        ->required();
    auto* c_opt = sub->add_option("--ciphertext", *ciphertext, "16-bit ciphertext");
    auto* k_opt = sub->add_option("--key", *key,
                                  "plant this key instead: the ciphertext is computed");
    c_opt->excludes(k_opt);
    k_opt->excludes(c_opt);
    sub->add_option("--method", *method, "search method")
        ->check(CLI::IsMember(std::vector<std::string>{"grover", "exhaustive"}));
    sub->add_option("--seed", *seed, "master seed");
    sub->add_option("--retries", *retries, "Grover resampling budget");
    sub->add_option("--out", *out_path, "write the JSON report to this file");
    sub->callback([=, &out, &exit_code] {
        const SaesBlock p = parse_u16(*plaintext, "--plaintext");
        SaesBlock c = 0;
        if (k_opt->count() > 0) {
            c = saes_encrypt(p, parse_u16(*key, "--key"));
        } else if (c_opt->count() > 0) {
            c = parse_u16(*ciphertext, "--ciphertext");
        } else {
            throw std::invalid_argument("saes crack: need --ciphertext or --key");
        }
        const KeySearchReport report =
            *method == "exhaustive" ? brute_force_key(p, c)
                                    : grover_key_search(p, c, Seed{*seed, 0}, *retries);
        json config{{"plaintext", format_hex4(p)},
                    {"ciphertext", format_hex4(c)},
                    {"method", *method},
                    {"retries", *retries}};
        emit_json("saes crack", *seed, std::move(config), report, *out_path, out);
        exit_code = 0;
    });
}

void add_shor(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* sub = app.add_subcommand("shor", "factor n via period finding");
    auto n = std::make_shared<std::uint64_t>(0);
    auto backend = std::make_shared<std::string>("classical");
    auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
    auto attempts = std::make_shared<std::uint32_t>(20);
    auto cap = std::make_shared<std::size_t>(kDefaultQubitCap);
    auto out_path = std::make_shared<std::string>();
    sub->add_option("--n", *n, "modulus to factor")->required();
    sub->add_option("--backend", *backend, "period-finding backend")
        ->check(CLI::IsMember(std::vector<std::string>{"classical", "quantum-sim"}));
    sub->add_option("--seed", *seed, "master seed");
    sub->add_option("--max-attempts", *attempts, "base draws before giving up");
    sub->add_option("--statevector-cap", *cap, "qubit ceiling for the quantum backend");
    sub->add_option("--out", *out_path, "write the JSON report to this file");
    sub->callback([=, &out, &exit_code] {
        const ShorBackend b = *backend == "classical" ? ShorBackend::Classical
                                                      : ShorBackend::QuantumSim;
        const FactorizationResult r = shor_factor(*n, b, Seed{*seed, 0}, *attempts, *cap);
        json config{{"n", *n},
                    {"backend", *backend},
                    {"max_attempts", *attempts},
                    {"statevector_cap", *cap}};
        emit_json("shor", *seed, std::move(config), r, *out_path, out);
        exit_code = r.factors ? 0 : 4;  // no factors: prime n or exhausted draws
    });
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deterministic quantum-security simulations: B92/PPM key distribution, "
                 "collective-rotation noise analysis, Grover search, S-AES key recovery "
                 "and Shor factorization"};
    app.name("qsec");
    app.require_subcommand(1);
    app.set_config("--config", "", "optional key=value configuration file");
    app.set_version_flag("--version", std::string(kVersion));

    int exit_code = 0;
    add_b92(app, out, exit_code);
    add_ppm(app, out, exit_code);
    add_noise(app, out, exit_code);
    add_grover(app, out, exit_code);
    add_saes(app, out, exit_code);
    add_shor(app, out, exit_code);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        return exit_code;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const ProbabilisticFailure& e) {
        err << "probabilistic failure: " << e.what()
            << " (predicted success per attempt: " << e.predicted_success() << ")\n";
        return 4;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qsec::cli
