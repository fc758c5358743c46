#pragma once

#include <span>
#include <string>
#include <vector>

#include "spinbath/bath.hpp"
#include "spinbath/spin_ops.hpp"

namespace spinbath {

enum class Component { zz, perp };

/// Symmetric frequency grid nu = -nu_max .. +nu_max in steps of dnu.
struct GridSpec {
  double nu_max_MHz = 200.0;
  double dnu_MHz = 0.01;

  int half_bins() const { return static_cast<int>(nu_max_MHz / dnu_MHz + 0.5); }
  int n_bins() const { return 2 * half_bins() + 1; }
  double freq(int i) const { return (i - half_bins()) * dnu_MHz; }
};

/// Two-sided PSD of one Overhauser component. density integrates to the
/// dynamic variance; the quasi-static weight lives in static_variance.
struct NoiseSpectrum {
  std::vector<double> freq_MHz;
  std::vector<double> density;
  double static_variance = 0.0;
  std::string component;
  bool grid_coarse_warning = false;

  double dnu() const { return freq_MHz.size() > 1 ? freq_MHz[1] - freq_MHz[0] : 0.0; }
  /// Trapezoidal integral of density over the grid.
  double dynamic_variance() const;
  double total_variance() const { return static_variance + dynamic_variance(); }
};

/// Exact line decomposition of the infinite-temperature autocorrelation of
/// coupling * O under H:  C(t) = sum_lines w exp(i 2 pi nu t) + static.
struct TransitionLines {
  struct Line {
    double freq_MHz;
    double weight;
  };
  std::vector<Line> lines;
  double static_weight = 0.0;
};

TransitionLines transition_lines(const Matrix& h, const Matrix& observable, double coupling);

/// zz -> lab iz; perp -> the pair (lab ix, lab iy).
std::vector<Matrix> component_observables(Component component, const SpinOperators& ops);

struct PsdOptions {
  int n_samples = 20000;
  int threads = 0;       // <= 0: resolve from env / hardware
  bool per_species = false;
};

struct PsdResult {
  NoiseSpectrum total;
  std::vector<std::string> species_names;   // parallel to per_species
  std::vector<NoiseSpectrum> per_species;   // empty unless requested
};

/// Monte-Carlo ensemble average of transition lines over the configured
/// (species, nu_q, axes) distribution, deposited with a Gaussian kernel of
/// width 2*dnu; lines inside |nu| < dnu/2 fold into static_variance. Scaled
/// so static + integral equals the component variance implied by sigma_oh.
PsdResult ensemble_psd(const BathConfig& config, Component component, const GridSpec& grid,
                       const PsdOptions& opts);

/// Straightforward single-pass serial implementation, kept as the reference
/// for the chunked kernel.
NoiseSpectrum ensemble_psd_reference(const BathConfig& config, Component component,
                                     const GridSpec& grid, int n_samples);

/// C(t) = integral density * cos(2 pi nu t) dnu, in the density's units.
std::vector<double> autocorrelation(const NoiseSpectrum& spectrum, std::span<const double> t_ns);

/// Smallest grid time after which |C| stays below C(0)/e for the rest of the
/// probed window. Returns a negative value when |C| never settles below it.
double decorrelation_time_ns(const NoiseSpectrum& spectrum, double t_max_ns, double dt_ns);

}  // namespace spinbath
