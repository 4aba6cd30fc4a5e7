// qpump.cpp — command-line front end

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qpump/config.hpp"
#include "qpump/experiments.hpp"
#include "qpump/parallel.hpp"
#include "qpump/quadrature.hpp"

namespace {

struct SubcommandSpec {
    const char* name;
    const char* description;
    qpump::config::ExperimentKind kind;
};

constexpr SubcommandSpec subcommands[] = {
    {"flux-sweep", "Net current over a frequency sweep, one row per (Omega, beta_s)",
     qpump::config::ExperimentKind::FluxSweep},
    {"decompose", "Per-bath dynamical/geometric/non-adiabatic split for one cycle",
     qpump::config::ExperimentKind::Decompose},
    {"phi0-profile", "Initial-memory profile phi0_hat(j) across the cycle",
     qpump::config::ExperimentKind::Phi0Profile},
    {"lambda-trace", "Decay rate Lambda(t) against its long-time limit",
     qpump::config::ExperimentKind::LambdaTrace},
    {"geometric", "Continuous-driving currents: line and surface forms",
     qpump::config::ExperimentKind::Geometric},
};

}

int main(int argc, char** argv) {
    CLI::App app{"qpump: heat transfer through a modulated two-level junction"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    unsigned threads = 0;

    qpump::config::ExperimentKind kind{};
    for (const auto& spec : subcommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        sub->add_option("--config", config_path, "Config file (defaults apply when omitted)");
        sub->add_option("--out", out_path, "Output CSV path (stdout when omitted)");
        sub->add_option("--threads", threads,
                        "Worker threads (default: QPUMP_THREADS or hardware)");
        sub->callback([&kind, k = spec.kind] { kind = k; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto cfg = config_path.empty() ? qpump::config::ExperimentConfig{}
                                             : qpump::config::parse_config_file(config_path);
        if (threads == 0) threads = qpump::parallel::default_thread_count();

        if (out_path.empty()) {
            qpump::experiments::run(kind, cfg, std::cout, threads);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "qpump: cannot open output file '" << out_path << "'\n";
                return 1;
            }
            qpump::experiments::run(kind, cfg, out, threads);
        }
        return 0;
    } catch (const qpump::config::ConfigError& e) {
        std::cerr << "qpump: " << e.what() << '\n';
        return 2;
    } catch (const qpump::quad::ConvergenceError& e) {
        std::cerr << "qpump: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "qpump: " << e.what() << '\n';
        return 1;
    }
}
