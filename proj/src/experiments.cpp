// experiments.cpp

#include "qpump/experiments.hpp"

#include <fstream>
#include <ostream>

#include "qpump/adiabatic.hpp"
#include "qpump/csv.hpp"
#include "qpump/decomposition.hpp"
#include "qpump/dynamics.hpp"
#include "qpump/parallel.hpp"

namespace qpump::experiments {

namespace {

double rad_per_s(double omega_THz) { return omega_THz * 1e12; }

// Schedule for one cycle at the given frequency: either the discretized
// sinusoidal protocol or a tabulated file reinterpreted with this cycle period.
protocol::DiscretizedSchedule schedule_for(const config::ExperimentConfig& cfg,
                                           double omega_rad_per_s) {
    protocol::DiscretizedSchedule schedule;
    if (cfg.schedule_csv.empty()) {
        schedule = protocol::discretize(cfg.modulation(omega_rad_per_s), cfg.n, cfg.sample_point);
    } else {
        std::ifstream in(cfg.schedule_csv);
        if (!in)
            throw config::ConfigError(
                {"schedule_csv: cannot open '" + cfg.schedule_csv + "'"});
        schedule =
            protocol::read_schedule_csv(in, 2.0 * std::numbers::pi / omega_rad_per_s);
    }
    if (cfg.swap_baths) schedule = protocol::swap_baths(schedule);
    return schedule;
}

}

std::vector<SweepRow> flux_sweep(const config::ExperimentConfig& cfg, unsigned threads) {
    const auto omegas = cfg.omega_grid_THz();
    const auto u = cfg.unit_system();
    const auto baths = cfg.baths();

    std::vector<SweepRow> rows(omegas.size() * cfg.beta_s.size());
    parallel::parallel_for(rows.size(), threads, [&](std::size_t index) {
        const std::size_t oi = index / cfg.beta_s.size();
        const std::size_t bi = index % cfg.beta_s.size();
        const double omega_THz = omegas[oi];
        const double beta = cfg.beta_s[bi];
        const auto schedule = schedule_for(cfg, rad_per_s(omega_THz));
        const auto d = decomposition::decompose_flux(
            schedule, baths, u, bath::gibbs_ground_population(beta), cfg.period_count);
        rows[index] = {omega_THz, beta, d.j_hat_per_s, d.j_hat_geo_per_s};
    });
    return rows;
}

void run_flux_sweep(const config::ExperimentConfig& cfg, std::ostream& out, unsigned threads) {
    const auto rows = flux_sweep(cfg, threads);
    out << "Omega_THz,beta_s,J_hat_per_s,J_hat_geo_per_s\n";
    for (const auto& row : rows) {
        out << csv::format_double(row.omega_THz) << ',' << csv::format_double(row.beta_s) << ','
            << csv::format_double(row.j_hat_per_s) << ','
            << csv::format_double(row.j_hat_geo_per_s) << '\n';
    }
}

void run_decompose(const config::ExperimentConfig& cfg, std::ostream& out) {
    const auto schedule = schedule_for(cfg, rad_per_s(cfg.omega_THz));
    const auto d = decomposition::decompose_flux(schedule, cfg.baths(), cfg.unit_system(),
                                                 bath::gibbs_ground_population(cfg.beta_s.front()),
                                                 cfg.period_count);
    decomposition::write_decomposition_csv(out, d);
}

void run_phi0_profile(const config::ExperimentConfig& cfg, std::ostream& out) {
    auto schedule = schedule_for(cfg, rad_per_s(cfg.omega_THz));
    if (cfg.period_count > 1) schedule = protocol::tile(schedule, cfg.period_count);
    const auto profile =
        decomposition::phi0_profile(schedule, cfg.baths(), cfg.unit_system(),
                                    bath::gibbs_ground_population(cfg.beta_s.front()));
    decomposition::write_profile_csv(out, profile);
}

void run_lambda_trace(const config::ExperimentConfig& cfg, std::ostream& out, unsigned threads) {
    const auto settings = cfg.settings();
    const auto grid = cfg.time_grid();
    const auto u = cfg.unit_system();
    const auto baths = cfg.baths();

    std::vector<correlation::CorrelationTrace> traces(settings.size());
    parallel::parallel_for(settings.size(), threads, [&](std::size_t i) {
        traces[i] = correlation::trace_for_setting(baths, settings[i], u, grid);
    });
    correlation::write_lambda_csv(out, traces);
}

void run_geometric(const config::ExperimentConfig& cfg, std::ostream& out) {
    const auto result =
        adiabatic::compute(cfg.modulation(rad_per_s(cfg.omega_THz)), cfg.baths(),
                           cfg.unit_system());
    adiabatic::write_adiabatic_csv(out, result);
}

void run(config::ExperimentKind kind, const config::ExperimentConfig& cfg, std::ostream& out,
         unsigned threads) {
    auto errors = cfg.validate(kind);
    if (!errors.empty()) throw config::ConfigError(std::move(errors));

    switch (kind) {
        case config::ExperimentKind::FluxSweep: run_flux_sweep(cfg, out, threads); break;
        case config::ExperimentKind::Decompose: run_decompose(cfg, out); break;
        case config::ExperimentKind::Phi0Profile: run_phi0_profile(cfg, out); break;
        case config::ExperimentKind::LambdaTrace: run_lambda_trace(cfg, out, threads); break;
        case config::ExperimentKind::Geometric: run_geometric(cfg, out); break;
    }
}

}
