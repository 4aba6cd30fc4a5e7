// experiments.hpp — reproducible experiment recipes behind the CLI subcommands

#pragma once

#include <iosfwd>
#include <vector>

#include "qpump/config.hpp"

namespace qpump::experiments {

struct SweepRow {
    double omega_THz{0};
    double beta_s{0};
    double j_hat_per_s{0};
    double j_hat_geo_per_s{0};
};

// Omega outer, beta_s inner; rows are computed in a work pool but returned in
// deterministic order regardless of thread count.
std::vector<SweepRow> flux_sweep(const config::ExperimentConfig& cfg, unsigned threads);

// CSV with header "Omega_THz,beta_s,J_hat_per_s,J_hat_geo_per_s"
void run_flux_sweep(const config::ExperimentConfig& cfg, std::ostream& out, unsigned threads);

void run_decompose(const config::ExperimentConfig& cfg, std::ostream& out);
void run_phi0_profile(const config::ExperimentConfig& cfg, std::ostream& out);
void run_lambda_trace(const config::ExperimentConfig& cfg, std::ostream& out, unsigned threads);
void run_geometric(const config::ExperimentConfig& cfg, std::ostream& out);

// Validates the config for the chosen experiment (throwing ConfigError on
// problems), then dispatches to the runner above.
void run(config::ExperimentKind kind, const config::ExperimentConfig& cfg, std::ostream& out,
         unsigned threads);

}
