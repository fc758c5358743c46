#include "spinbath/coherence.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "spinbath/parallel.hpp"
#include "spinbath/units.hpp"

namespace spinbath {

Channels parse_channels(const std::string& text) {
  if (text == "both") return Channels::both;
  if (text == "linear") return Channels::linear_only;
  if (text == "quad" || text == "quadratic") return Channels::quadratic_only;
  if (text == "none") return Channels::none;
  throw std::invalid_argument("unknown channels value: " + text);
}

std::string channels_name(Channels channels) {
  switch (channels) {
    case Channels::both: return "both";
    case Channels::linear_only: return "linear";
    case Channels::quadratic_only: return "quad";
    case Channels::none: return "none";
  }
  return "both";
}

double chi_from_splitting_noise(const PulseSequence& seq, const NoiseSpectrum& spectrum) {
  const double f0 = std::norm(filter_transform(seq, 0.0));
  double integral = 0.0;
  const size_t n = spectrum.density.size();
  for (size_t j = 0; j < n; ++j) {
    const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    if (spectrum.density[j] == 0.0) continue;
    integral += w * spectrum.density[j] * filter_magnitude(seq, spectrum.freq_MHz[j]);
  }
  integral *= spectrum.dnu();
  return 0.5 * kRadPerMHzNs * kRadPerMHzNs * (spectrum.static_variance * f0 + integral);
}

double chi_linear(const PulseSequence& seq, const NoiseSpectrum& s_zz, double gamma_e_GHz_per_T) {
  const double k2 = gamma_e_GHz_per_T * gamma_e_GHz_per_T;  // (MHz/mT)^2
  NoiseSpectrum scaled = s_zz;
  for (auto& v : scaled.density) v *= k2;
  scaled.static_variance *= k2;
  return chi_from_splitting_noise(seq, scaled);
}

namespace {

std::mutex fftw_plan_mutex;

/// Linear self-convolution (d * d)(nu) on the input grid, via zero-padded
/// real FFTs: conv[i] = dnu * sum_j d_j d_{i+half-j}.
std::vector<double> self_convolution(const std::vector<double>& density, double dnu) {
  const int n = static_cast<int>(density.size());
  int len = 1;
  while (len < 2 * n - 1) len <<= 1;
  double* in = fftw_alloc_real(len);
  fftw_complex* spec = fftw_alloc_complex(len / 2 + 1);
  std::fill(in, in + len, 0.0);
  std::copy(density.begin(), density.end(), in);
  fftw_plan fwd;
  fftw_plan bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fwd = fftw_plan_dft_r2c_1d(len, in, spec, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(len, spec, in, FFTW_ESTIMATE);
  }
  fftw_execute(fwd);
  for (int k = 0; k < len / 2 + 1; ++k) {
    const double re = spec[k][0];
    const double im = spec[k][1];
    spec[k][0] = re * re - im * im;
    spec[k][1] = 2.0 * re * im;
  }
  fftw_execute(bwd);
  // full linear convolution index k corresponds to frequency (k - (n-1)) * dnu;
  // keep the central window matching the input grid.
  const int half = (n - 1) / 2;
  std::vector<double> out(n);
  const double norm = dnu / len;
  for (int i = 0; i < n; ++i) {
    out[i] = in[i + half] * norm;
  }
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  fftw_free(in);
  fftw_free(spec);
  return out;
}

}  // namespace

NoiseSpectrum effective_quadratic_spectrum(const NoiseSpectrum& s_perp, double b_ext_T,
                                           double gamma_e_GHz_per_T) {
  if (b_ext_T <= 0.0)
    throw std::invalid_argument("effective_quadratic_spectrum: b_ext must be positive");
  const double scale = gamma_e_GHz_per_T / (2.0 * 1000.0 * b_ext_T);  // MHz per mT^2
  const double s2 = scale * scale;
  const double sp = s_perp.static_variance;

  NoiseSpectrum out;
  out.component = "quad";
  out.freq_MHz = s_perp.freq_MHz;
  out.grid_coarse_warning = s_perp.grid_coarse_warning;
  const std::vector<double> conv = self_convolution(s_perp.density, s_perp.dnu());
  out.density.resize(s_perp.density.size());
  for (size_t i = 0; i < out.density.size(); ++i) {
    out.density[i] = s2 * (2.0 * sp * s_perp.density[i] + conv[i]);
  }
  out.static_variance = s2 * sp * sp;
  return out;
}

double visibility(const PulseSequence& seq, const NoiseSpectrum& s_zz,
                  const NoiseSpectrum& s_perp, const BathConfig& config, Channels channels) {
  double chi = 0.0;
  if (channels == Channels::both || channels == Channels::linear_only) {
    chi += chi_linear(seq, s_zz, config.gamma_e_GHz_per_T);
  }
  if (channels == Channels::both || channels == Channels::quadratic_only) {
    const NoiseSpectrum quad =
        effective_quadratic_spectrum(s_perp, config.b_ext_T, config.gamma_e_GHz_per_T);
    chi += chi_from_splitting_noise(seq, quad);
  }
  return seq.visibility_prefactor() * std::exp(-chi);
}

PulseSequence SequenceFamily::make(double total_time_ns) const {
  switch (kind) {
    case SequenceKind::ramsey:
      return PulseSequence::ramsey(total_time_ns, fidelity);
    case SequenceKind::hahn:
      return PulseSequence::hahn(total_time_ns, fidelity);
    case SequenceKind::cpmg:
      return PulseSequence::cpmg(cpmg_n, total_time_ns, fidelity);
    case SequenceKind::custom:
      break;
  }
  throw std::invalid_argument("SequenceFamily: unsupported kind");
}

std::string SequenceFamily::name() const {
  switch (kind) {
    case SequenceKind::ramsey: return "ramsey";
    case SequenceKind::hahn: return "hahn";
    case SequenceKind::cpmg: return "cpmg:" + std::to_string(cpmg_n);
    case SequenceKind::custom: break;
  }
  return "custom";
}

SequenceFamily parse_sequence(const std::string& text, double fidelity) {
  SequenceFamily family;
  family.fidelity = fidelity;
  if (text == "ramsey") {
    family.kind = SequenceKind::ramsey;
  } else if (text == "hahn") {
    family.kind = SequenceKind::hahn;
  } else if (text.rfind("cpmg:", 0) == 0) {
    family.kind = SequenceKind::cpmg;
    family.cpmg_n = std::stoi(text.substr(5));
    if (family.cpmg_n < 1) throw std::invalid_argument("cpmg pulse count must be >= 1");
  } else {
    throw std::invalid_argument("unknown sequence: " + text + " (want ramsey|hahn|cpmg:N)");
  }
  return family;
}

CurveResult visibility_curve(const BathConfig& config, const SequenceFamily& family,
                             std::span<const double> t_grid_ns, const CurveOptions& opts) {
  config.validate();
  PsdOptions psd_opts{opts.n_samples, opts.threads, opts.breakdown};
  const bool need_lin =
      opts.channels == Channels::both || opts.channels == Channels::linear_only;
  const bool need_quad =
      opts.channels == Channels::both || opts.channels == Channels::quadratic_only;

  PsdResult zz, perp;
  NoiseSpectrum quad;
  std::vector<NoiseSpectrum> quad_by_species;
  if (need_lin) zz = ensemble_psd(config, Component::zz, opts.grid, psd_opts);
  if (need_quad) {
    perp = ensemble_psd(config, Component::perp, opts.grid, psd_opts);
    quad = effective_quadratic_spectrum(perp.total, config.b_ext_T, config.gamma_e_GHz_per_T);
    for (const auto& sp : perp.per_species) {
      quad_by_species.push_back(
          effective_quadratic_spectrum(sp, config.b_ext_T, config.gamma_e_GHz_per_T));
    }
  }

  const int n_species = static_cast<int>(config.species.size());
  const int64_t n_t = static_cast<int64_t>(t_grid_ns.size());
  CurveResult result;
  result.curve.times_ns.assign(t_grid_ns.begin(), t_grid_ns.end());
  result.curve.visibility.resize(n_t);
  result.curve.stderr_vis.assign(n_t, 0.0);
  result.curve.chi_lin.resize(n_t);
  result.curve.chi_quad.resize(n_t);
  result.curve.meta = {config.b_ext_T, family.name(), "filter", config.seed};
  if (opts.breakdown) {
    for (const auto& sp : config.species) result.species_names.push_back(sp.species.name);
    result.chi_by_species.assign(n_species, std::vector<double>(n_t, 0.0));
  }

  parallel_for(n_t, resolve_threads(opts.threads), [&](int64_t i) {
    const PulseSequence seq = family.make(t_grid_ns[i]);
    const double cl = need_lin ? chi_linear(seq, zz.total, config.gamma_e_GHz_per_T) : 0.0;
    const double cq = need_quad ? chi_from_splitting_noise(seq, quad) : 0.0;
    result.curve.chi_lin[i] = cl;
    result.curve.chi_quad[i] = cq;
    result.curve.visibility[i] = seq.visibility_prefactor() * std::exp(-cl - cq);
    if (opts.breakdown) {
      for (int s = 0; s < n_species; ++s) {
        double chi_s = 0.0;
        if (need_lin) chi_s += chi_linear(seq, zz.per_species[s], config.gamma_e_GHz_per_T);
        if (need_quad) chi_s += chi_from_splitting_noise(seq, quad_by_species[s]);
        result.chi_by_species[s][i] = chi_s;
      }
    }
  });
  return result;
}

}  // namespace spinbath
