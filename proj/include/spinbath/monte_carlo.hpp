#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "spinbath/bath.hpp"
#include "spinbath/coherence.hpp"
#include "spinbath/filter.hpp"

namespace spinbath {

struct TrajectoryConfig {
  int n_realizations = 20000;
  double time_step_ns = 0.0;  // <= 0: derived from the largest active frequency
  uint64_t seed = 7;
  int bath_subsample = 2000;  // nuclei used, couplings renormalized on the subset
  int threads = 0;
  Channels channels = Channels::both;
};

struct McPoint {
  double visibility = 0.0;
  double stderr_vis = 0.0;
};

/// Semiclassical time-domain oracle. Every nucleus gets an independent
/// Haar-random pure state per realization; its expectation trajectory evolves
/// under exp(-i 2 pi H t). The electron phase integrates the switched
/// linear (gamma_e B_z) and quadratic (gamma_e B_perp^2 / 2 B_ext) splitting
/// shifts; visibility is V0 |mean exp(i phi)|.
///
/// Couplings carry the per-species sqrt(d+1) Haar-moment factor so the
/// realized semiclassical second moments match the quantum infinite-
/// temperature autocorrelation exactly; the static FID limit is then exact
/// by construction.
class TrajectorySimulator {
 public:
  TrajectorySimulator(const BathConfig& config, const BathSample& bath,
                      const TrajectoryConfig& tc);
  ~TrajectorySimulator();

  double max_active_frequency_MHz() const;
  double time_step_ns() const;

  /// Realized sequence with total time and pulses snapped onto the
  /// trajectory grid (pulses land on grid points exactly).
  PulseSequence snap(const SequenceFamily& family, double total_time_ns) const;

  /// All sequences share the same trajectories; per-realization phases are
  /// evaluated for every sequence in one pass.
  std::vector<McPoint> run(const std::vector<PulseSequence>& sequences) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

McPoint simulate_sequence(const BathConfig& config, const BathSample& bath,
                          const PulseSequence& seq, const TrajectoryConfig& tc);

/// Naive per-time-step evolution of every nucleus without pruning or
/// closed-form phase sums; the reference the production kernel is tested
/// against.
McPoint simulate_sequence_reference(const BathConfig& config, const BathSample& bath,
                                    const PulseSequence& seq, const TrajectoryConfig& tc);

VisibilityCurve mc_visibility_curve(const BathConfig& config, const SequenceFamily& family,
                                    std::span<const double> t_grid_ns,
                                    const TrajectoryConfig& tc);

struct CompareReport {
  double max_abs_dv = 0.0;
  double mean_abs_dv = 0.0;
  VisibilityCurve mc;
  VisibilityCurve ff;
};

/// Runs both engines on identical sequences (the MC-snapped ones) and
/// reports the visibility discrepancy.
CompareReport compare_to_filter(const BathConfig& config, const SequenceFamily& family,
                                std::span<const double> t_grid_ns, const TrajectoryConfig& tc,
                                const CurveOptions& ff_opts);

}  // namespace spinbath
