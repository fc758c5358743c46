#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinbath/bath.hpp"
#include "spinbath/filter.hpp"
#include "spinbath/spectrum.hpp"

namespace spinbath {

enum class Channels { both, linear_only, quadratic_only, none };

Channels parse_channels(const std::string& text);
std::string channels_name(Channels channels);

/// chi for a splitting-noise spectrum (MHz^2/MHz + static MHz^2):
/// chi = 1/2 (2 pi 1e-3)^2 [ static |f(0)|^2 + integral S(nu) |f(nu)|^2 dnu ].
double chi_from_splitting_noise(const PulseSequence& seq, const NoiseSpectrum& spectrum);

/// Linear channel: field noise S_zz (mT^2/MHz) scaled by gamma_e^2 into
/// splitting noise. gamma_e in GHz/T (== MHz/mT).
double chi_linear(const PulseSequence& seq, const NoiseSpectrum& s_zz, double gamma_e_GHz_per_T);

/// Splitting-noise spectrum of delta_nu = gamma_e (Bx^2 + By^2) / (2 B_ext),
/// from the Gaussian square law applied to the two transverse components
/// (each S_perp/2, static parts included). The constant mean shift is not
/// part of the spectrum; the shot-to-shot static-squared weight lands in
/// static_variance. Units MHz^2/MHz on the input grid.
NoiseSpectrum effective_quadratic_spectrum(const NoiseSpectrum& s_perp, double b_ext_T,
                                           double gamma_e_GHz_per_T);

/// V = V0 exp(-chi_linear - chi_quad) with V0 = fidelity^(pulses + 1).
double visibility(const PulseSequence& seq, const NoiseSpectrum& s_zz,
                  const NoiseSpectrum& s_perp, const BathConfig& config,
                  Channels channels = Channels::both);

struct CurveMeta {
  double b_ext_T = 0.0;
  std::string sequence;
  std::string engine;  // "filter" or "mc"
  uint64_t seed = 0;
};

struct VisibilityCurve {
  std::vector<double> times_ns;
  std::vector<double> visibility;
  std::vector<double> stderr_vis;  // zero for the deterministic filter engine
  std::vector<double> chi_lin;
  std::vector<double> chi_quad;
  CurveMeta meta;
};

struct SequenceFamily {
  SequenceKind kind = SequenceKind::hahn;
  int cpmg_n = 1;
  double fidelity = 0.97;

  PulseSequence make(double total_time_ns) const;
  std::string name() const;
};

SequenceFamily parse_sequence(const std::string& text, double fidelity);

struct CurveOptions {
  GridSpec grid;
  int n_samples = 20000;
  Channels channels = Channels::both;
  int threads = 0;
  bool breakdown = false;
};

struct CurveResult {
  VisibilityCurve curve;
  std::vector<std::string> species_names;
  std::vector<std::vector<double>> chi_by_species;  // [species][time]
};

/// Filter-function curve over the time grid, spectra computed once per call.
CurveResult visibility_curve(const BathConfig& config, const SequenceFamily& family,
                             std::span<const double> t_grid_ns, const CurveOptions& opts);

}  // namespace spinbath
