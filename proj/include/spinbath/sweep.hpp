// sweep.hpp — Experiment driver: concurrence trajectories over (lambda,
// lambda_0) grids, Zeno survival sweeps, plot-ready CSV/JSON output.

#pragma once

#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "spinbath/config.hpp"
#include "spinbath/dynamics.hpp"
#include "spinbath/format.hpp"
#include "spinbath/states.hpp"
#include "spinbath/zeno.hpp"

namespace spinbath {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void emit_trajectory(const Trajectory& tr, std::ostream& out, OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "t,concurrence,purity,trace_error\n";
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            out << format_real(tr.times[i]) << ','
                << format_real(tr.concurrences[i]) << ','
                << format_real(tr.purities[i]) << ','
                << format_real(tr.trace_errors[i]) << '\n';
        }
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            out << "  {\"t\": " << format_real(tr.times[i])
                << ", \"concurrence\": " << format_real(tr.concurrences[i])
                << ", \"purity\": " << format_real(tr.purities[i])
                << ", \"trace_error\": " << format_real(tr.trace_errors[i]) << '}'
                << (i + 1 < tr.times.size() ? ",\n" : "\n");
        }
        out << "]\n";
    }
    if (!out) throw IoError("emit_trajectory: write failed");
}

inline void emit_zeno(const ZenoResult& zr, double interval, std::ostream& out,
                      OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "step,t,step_prob,survival,trace_diag\n";
        for (std::size_t i = 0; i < zr.step_probabilities.size(); ++i) {
            out << (i + 1) << ','
                << format_real((i + 1) * interval) << ','
                << format_real(zr.step_probabilities[i]) << ','
                << format_real(zr.survival_probabilities[i]) << ','
                << format_real(zr.trace_diagnostics[i]) << '\n';
        }
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < zr.step_probabilities.size(); ++i) {
            out << "  {\"step\": " << (i + 1)
                << ", \"t\": " << format_real((i + 1) * interval)
                << ", \"step_prob\": " << format_real(zr.step_probabilities[i])
                << ", \"survival\": " << format_real(zr.survival_probabilities[i])
                << ", \"trace_diag\": " << format_real(zr.trace_diagnostics[i]) << '}'
                << (i + 1 < zr.step_probabilities.size() ? ",\n" : "\n");
        }
        out << "]\n";
    }
    if (!out) throw IoError("emit_zeno: write failed");
}

// One full trajectory at a fixed (lambda, lambda_0) point.
inline Trajectory compute_trajectory(const ExperimentConfig& cfg, double lambda_intra,
                                     double lambda_sb) {
    const SpinRegister reg = SpinRegister::default_instance();
    ModelParams p = cfg.params;
    p.lambda_intra = lambda_intra;
    p.lambda_sb = lambda_sb;

    CouplingTopology topo;
    if (cfg.topology_edges.empty()) {
        topo = CouplingTopology::default_for(reg);
    } else {
        topo.edges = cfg.topology_edges;
    }

    const Matrix h = build_total(p, topo, reg, cfg.system_form);
    const Evolver evolver(h, reg);

    const ThermalSpec thermal{p.temperature};
    const Matrix rho0 = assemble_initial(
        make_system_state(cfg.state),
        thermal_state(bath1_local_hamiltonian(p), thermal),
        thermal_state(bath2_local_hamiltonian(p), thermal));

    return run_trajectory(evolver, rho0, make_time_grid(cfg.t_max, cfg.dt));
}

inline ZenoResult compute_zeno(const ExperimentConfig& cfg, double lambda_intra,
                               double lambda_sb, int n_measurements, double& interval_out) {
    const SpinRegister reg = SpinRegister::default_instance();
    ModelParams p = cfg.params;
    p.lambda_intra = lambda_intra;
    p.lambda_sb = lambda_sb;

    CouplingTopology topo;
    if (cfg.topology_edges.empty()) {
        topo = CouplingTopology::default_for(reg);
    } else {
        topo.edges = cfg.topology_edges;
    }

    const Matrix h = build_total(p, topo, reg, cfg.system_form);
    const Evolver evolver(h, reg);

    const ThermalSpec thermal{p.temperature};
    const Vector psi0 = system_state_vector(cfg.state);
    const Matrix rho0 = assemble_initial(
        make_system_state(cfg.state),
        thermal_state(bath1_local_hamiltonian(p), thermal),
        thermal_state(bath2_local_hamiltonian(p), thermal));

    const double total = cfg.zeno && cfg.zeno->total_time
                             ? *cfg.zeno->total_time
                             : 2.0 * std::numbers::pi / lambda_sb;
    ZenoSchedule schedule{n_measurements, total / n_measurements};
    interval_out = schedule.interval;
    return run_zeno(rho0, psi0, evolver, schedule);
}

inline std::string trajectory_filename(double lambda, double lambda0, OutputFormat format) {
    return "traj_lam" + format_real(lambda) + "_l0" + format_real(lambda0)
         + (format == OutputFormat::csv ? ".csv" : ".json");
}

inline std::string zeno_filename(double lambda0, int n, OutputFormat format) {
    return "zeno_l0" + format_real(lambda0) + "_N" + std::to_string(n)
         + (format == OutputFormat::csv ? ".csv" : ".json");
}

// Run every sweep point, writing one file per point into cfg.output_dir.
// Points are independent and run on up to `threads` workers; each file is
// written by exactly one worker, so the output is identical to a serial run.
inline std::vector<std::string> run_sweep(const ExperimentConfig& cfg, int threads = 1) {
    cfg.validate();
    namespace fs = std::filesystem;

    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("run_sweep: cannot create output directory " + cfg.output_dir);

    struct Task {
        bool is_zeno;
        double lambda;
        double lambda0;
        int n;
        std::string filename;
    };
    std::vector<Task> tasks;
    for (double l0 : cfg.lambda0_list) {
        for (double lam : cfg.lambda_list) {
            tasks.push_back({false, lam, l0, 0, trajectory_filename(lam, l0, cfg.format)});
        }
    }
    if (cfg.zeno) {
        const double zeno_lambda = cfg.zeno->lambda_intra.value_or(cfg.lambda_list.front());
        for (double l0 : cfg.lambda0_list) {
            for (int n : cfg.zeno->n_list) {
                tasks.push_back({true, zeno_lambda, l0, n, zeno_filename(l0, n, cfg.format)});
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) return;
            const Task& task = tasks[i];
            try {
                const fs::path path = fs::path(cfg.output_dir) / task.filename;
                std::ofstream out(path, std::ios::binary | std::ios::trunc);
                if (!out) throw IoError("run_sweep: cannot open " + path.string());
                if (task.is_zeno) {
                    double interval = 0.0;
                    const ZenoResult zr = compute_zeno(cfg, task.lambda, task.lambda0,
                                                       task.n, interval);
                    emit_zeno(zr, interval, out, cfg.format);
                } else {
                    emit_trajectory(compute_trajectory(cfg, task.lambda, task.lambda0),
                                    out, cfg.format);
                }
                out.flush();
                if (!out) throw IoError("run_sweep: write failed for " + task.filename);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int n_workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) std::rethrow_exception(first_error);

    std::vector<std::string> written;
    for (const auto& t : tasks) written.push_back(t.filename);
    return written;
}

} // namespace spinbath
