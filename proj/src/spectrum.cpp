#include "spinbath/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spinbath/parallel.hpp"
#include "spinbath/units.hpp"

namespace spinbath {

double NoiseSpectrum::dynamic_variance() const {
  if (density.size() < 2) return 0.0;
  double sum = std::accumulate(density.begin(), density.end(), 0.0);
  sum -= 0.5 * (density.front() + density.back());
  return sum * dnu();
}

TransitionLines transition_lines(const Matrix& h, const Matrix& observable, double coupling) {
  if (h.rows() != observable.rows() || h.cols() != observable.cols()) {
    throw std::invalid_argument("transition_lines: dimension mismatch");
  }
  const EigenSystem es = eigendecompose(h);
  const int d = static_cast<int>(h.rows());
  const Matrix m = es.eigenvectors.adjoint() * observable * es.eigenvectors;
  const double a2 = coupling * coupling;

  TransitionLines out;
  out.lines.reserve(static_cast<size_t>(d) * (d - 1));
  double diag_sq = 0.0;
  double diag_mean = 0.0;
  for (int i = 0; i < d; ++i) {
    const double mii = m(i, i).real();
    diag_sq += mii * mii;
    diag_mean += mii;
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const double w = a2 * std::norm(m(i, j)) / d;
      if (w > 0.0) {
        out.lines.push_back({es.eigenvalues[i] - es.eigenvalues[j], w});
      }
    }
  }
  diag_sq /= d;
  diag_mean /= d;
  out.static_weight = a2 * (diag_sq - diag_mean * diag_mean);
  return out;
}

std::vector<Matrix> component_observables(Component component, const SpinOperators& ops) {
  if (component == Component::zz) return {ops.iz};
  return {ops.ix, ops.iy};
}

namespace {

struct TaggedLine {
  double freq;
  double weight;
  int species;
};

struct SampleDraws {
  std::vector<TaggedLine> lines;
  std::vector<double> statics;          // per sample, summed over observables
  std::vector<int> species_of_sample;
};

constexpr int kKernelSigmas = 6;

/// Deposits w * Gaussian(nu0, sigma) onto bins [lo, hi) of `grid`, evaluated
/// with a multiply-recurrence instead of one exp per bin.
void deposit_line(std::span<double> grid_vals, const GridSpec& grid, int lo, int hi, double nu0,
                  double sigma, double w) {
  const int half = grid.half_bins();
  const double d = grid.dnu_MHz;
  const int j0 = std::max(lo, static_cast<int>(std::ceil((nu0 - kKernelSigmas * sigma) / d)) + half);
  const int j1 = std::min(hi - 1, static_cast<int>(std::floor((nu0 + kKernelSigmas * sigma) / d)) + half);
  if (j0 > j1) return;
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const double amp = w / (sigma * std::sqrt(kTwoPi));
  const double x0 = grid.freq(j0) - nu0;
  double g = amp * std::exp(-x0 * x0 * inv2s2);
  double r = std::exp(-(2.0 * x0 * d + d * d) * inv2s2);
  const double q = std::exp(-2.0 * d * d * inv2s2);
  for (int j = j0; j <= j1; ++j) {
    grid_vals[j] += g;
    g *= r;
    r *= q;
  }
}

double target_variance(const BathConfig& config, Component component) {
  return component == Component::zz ? config.component_variance()
                                    : 2.0 * config.component_variance();
}

bool coarse_grid(const BathConfig& config, const GridSpec& grid) {
  double min_larmor = std::numeric_limits<double>::max();
  for (const auto& sp : config.species) {
    min_larmor = std::min(min_larmor, sp.species.gamma_n_MHz_per_T * config.b_ext_T);
  }
  return grid.dnu_MHz > min_larmor / 10.0;
}

/// Lines for one sampled nucleus. Lines inside |nu| < dnu/2 fold into the
/// static weight; lines outside the depositable window are dropped (the
/// final rescale keeps the variance bookkeeping exact).
void lines_for_sample(const BathConfig& config, const NucleusRealization& n, Component component,
                      const GridSpec& grid, const std::vector<SpinOperators>& ops_cache,
                      double coupling_scale, std::vector<TaggedLine>& lines_out,
                      double& static_out) {
  const SpeciesParams& sp = config.species[n.species_index];
  const double a = coupling_scale * sp.species.hyperfine_weight;
  const Matrix h = nuclear_hamiltonian(sp.species, config.b_ext_T, n.qp);
  const double fold = 0.5 * grid.dnu_MHz;
  const double edge = grid.nu_max_MHz + kKernelSigmas * 2.0 * grid.dnu_MHz;
  for (const Matrix& obs : component_observables(component, ops_cache[n.species_index])) {
    const TransitionLines tl = transition_lines(h, obs, a);
    static_out += tl.static_weight;
    for (const auto& line : tl.lines) {
      if (std::abs(line.freq_MHz) < fold) {
        static_out += line.weight;
      } else if (std::abs(line.freq_MHz) < edge) {
        lines_out.push_back({line.freq_MHz, line.weight, n.species_index});
      }
    }
  }
}

std::vector<SpinOperators> make_ops_cache(const BathConfig& config) {
  std::vector<SpinOperators> cache;
  cache.reserve(config.species.size());
  for (const auto& sp : config.species) cache.push_back(spin_operators(sp.species.spin));
  return cache;
}

NoiseSpectrum blank_spectrum(const GridSpec& grid, Component component) {
  NoiseSpectrum s;
  s.component = component == Component::zz ? "zz" : "perp";
  s.freq_MHz.resize(grid.n_bins());
  for (int i = 0; i < grid.n_bins(); ++i) s.freq_MHz[i] = grid.freq(i);
  s.density.assign(grid.n_bins(), 0.0);
  return s;
}

}  // namespace

PsdResult ensemble_psd(const BathConfig& config, Component component, const GridSpec& grid,
                       const PsdOptions& opts) {
  config.validate();
  if (grid.dnu_MHz <= 0.0) throw std::invalid_argument("ensemble_psd: dnu must be positive");
  if (opts.n_samples < 1000) throw std::invalid_argument("ensemble_psd: n_samples must be >= 1000");
  const int threads = resolve_threads(opts.threads);
  const auto ops_cache = make_ops_cache(config);
  const double g = expected_coupling_scale(config);
  const int n_species = static_cast<int>(config.species.size());
  const int n_bins = grid.n_bins();

  // Phase 1: draw samples and collect their lines. Chunk-local buffers keep
  // the content independent of the thread count.
  std::vector<SampleDraws> chunks(kDefaultChunks);
  for_chunks(opts.n_samples, kDefaultChunks, threads, [&](int c, int64_t begin, int64_t end) {
    SampleDraws& draws = chunks[c];
    draws.lines.reserve((end - begin) * 32);
    for (int64_t i = begin; i < end; ++i) {
      const NucleusRealization n = draw_nucleus(config, static_cast<uint64_t>(i));
      double stat = 0.0;
      lines_for_sample(config, n, component, grid, ops_cache, g, draws.lines, stat);
      draws.statics.push_back(stat);
      draws.species_of_sample.push_back(n.species_index);
    }
  });

  size_t n_lines = 0;
  for (const auto& c : chunks) n_lines += c.lines.size();
  std::vector<TaggedLine> lines;
  lines.reserve(n_lines);
  std::vector<double> static_per_species(n_species, 0.0);
  for (const auto& c : chunks) {
    lines.insert(lines.end(), c.lines.begin(), c.lines.end());
    for (size_t k = 0; k < c.statics.size(); ++k) {
      static_per_species[c.species_of_sample[k]] += c.statics[k];
    }
  }

  // Counting sort by center bin (stable), so that phase 2 visits the lines
  // hitting any given bin in a fixed order.
  const double sigma = 2.0 * grid.dnu_MHz;
  auto center_bin = [&](const TaggedLine& l) {
    int b = static_cast<int>(std::lround(l.freq / grid.dnu_MHz)) + grid.half_bins();
    return std::clamp(b, 0, n_bins - 1);
  };
  std::vector<int> counts(n_bins + 1, 0);
  for (const auto& l : lines) counts[center_bin(l) + 1]++;
  for (int b = 0; b < n_bins; ++b) counts[b + 1] += counts[b];
  std::vector<TaggedLine> sorted(lines.size());
  {
    std::vector<int> cursor(counts.begin(), counts.end() - 1);
    for (const auto& l : lines) sorted[cursor[center_bin(l)]++] = l;
  }

  // Phase 2: each bin range is owned by exactly one chunk; a line within
  // kernel reach of the range boundary is visited by both neighbours but
  // only touches bins it owns.
  const int reach = 2 * kKernelSigmas + 1;  // kernel half-width in bins, sigma = 2 bins
  PsdResult result;
  result.total = blank_spectrum(grid, component);
  if (opts.per_species) {
    result.per_species.assign(n_species, blank_spectrum(grid, component));
    for (const auto& sp : config.species) result.species_names.push_back(sp.species.name);
  }
  for_chunks(n_bins, kDefaultChunks, threads, [&](int, int64_t lo, int64_t hi) {
    const int first =
        counts[static_cast<int>(std::max<int64_t>(0, lo - reach))];
    const int last =
        counts[static_cast<int>(std::min<int64_t>(n_bins, hi + reach))];
    for (int k = first; k < last; ++k) {
      const TaggedLine& l = sorted[k];
      deposit_line(result.total.density, grid, static_cast<int>(lo), static_cast<int>(hi), l.freq,
                   sigma, l.weight);
      if (opts.per_species) {
        deposit_line(result.per_species[l.species].density, grid, static_cast<int>(lo),
                     static_cast<int>(hi), l.freq, sigma, l.weight);
      }
    }
  });

  // Scale the per-sample average up to the bath size, then rescale so the
  // variance bookkeeping is exact.
  const double per_sample = static_cast<double>(config.n_nuclei) / opts.n_samples;
  double static_total = std::accumulate(static_per_species.begin(), static_per_species.end(), 0.0);
  for (auto& v : result.total.density) v *= per_sample;
  static_total *= per_sample;
  const double realized = static_total + result.total.dynamic_variance();
  if (realized <= 0.0) throw std::invalid_argument("ensemble_psd: realized variance is zero");
  const double rescale = target_variance(config, component) / realized;
  for (auto& v : result.total.density) v *= rescale;
  result.total.static_variance = static_total * rescale;
  result.total.grid_coarse_warning = coarse_grid(config, grid);
  for (int s = 0; s < n_species && opts.per_species; ++s) {
    auto& spec = result.per_species[s];
    for (auto& v : spec.density) v *= per_sample * rescale;
    spec.static_variance = static_per_species[s] * per_sample * rescale;
    spec.grid_coarse_warning = result.total.grid_coarse_warning;
  }
  return result;
}

NoiseSpectrum ensemble_psd_reference(const BathConfig& config, Component component,
                                     const GridSpec& grid, int n_samples) {
  config.validate();
  if (n_samples < 1000)
    throw std::invalid_argument("ensemble_psd_reference: n_samples must be >= 1000");
  const auto ops_cache = make_ops_cache(config);
  const double g = expected_coupling_scale(config);
  NoiseSpectrum out = blank_spectrum(grid, component);
  const double sigma = 2.0 * grid.dnu_MHz;
  double static_total = 0.0;
  std::vector<TaggedLine> lines;
  for (int i = 0; i < n_samples; ++i) {
    lines.clear();
    const NucleusRealization n = draw_nucleus(config, static_cast<uint64_t>(i));
    double stat = 0.0;
    lines_for_sample(config, n, component, grid, ops_cache, g, lines, stat);
    static_total += stat;
    for (const auto& l : lines) {
      deposit_line(out.density, grid, 0, grid.n_bins(), l.freq, sigma, l.weight);
    }
  }
  const double per_sample = static_cast<double>(config.n_nuclei) / n_samples;
  for (auto& v : out.density) v *= per_sample;
  static_total *= per_sample;
  const double realized = static_total + out.dynamic_variance();
  const double rescale = target_variance(config, component) / realized;
  for (auto& v : out.density) v *= rescale;
  out.static_variance = static_total * rescale;
  out.grid_coarse_warning = coarse_grid(config, grid);
  return out;
}

std::vector<double> autocorrelation(const NoiseSpectrum& spectrum, std::span<const double> t_ns) {
  std::vector<double> c(t_ns.size(), 0.0);
  const double d = spectrum.dnu();
  const size_t n = spectrum.density.size();
  for (size_t it = 0; it < t_ns.size(); ++it) {
    const double w = kRadPerMHzNs * t_ns[it];
    double acc = 0.0;
    for (size_t j = 0; j < n; ++j) {
      double weight = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      acc += weight * spectrum.density[j] * std::cos(w * spectrum.freq_MHz[j]);
    }
    c[it] = acc * d;
  }
  return c;
}

double decorrelation_time_ns(const NoiseSpectrum& spectrum, double t_max_ns, double dt_ns) {
  const int n = static_cast<int>(t_max_ns / dt_ns) + 1;
  std::vector<double> times(n);
  for (int i = 0; i < n; ++i) times[i] = i * dt_ns;
  const std::vector<double> c = autocorrelation(spectrum, times);
  const double threshold = c[0] / std::exp(1.0);
  int settle = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (std::abs(c[i]) >= threshold) {
      settle = i + 1;
      break;
    }
  }
  if (settle < 0) return 0.0;       // never above threshold after t=0
  if (settle >= n) return -1.0;     // still correlated at the end of the window
  return times[settle];
}

}  // namespace spinbath
