#pragma once

#include <cstdint>
#include <vector>

#include "spinbath/isotopes.hpp"
#include "spinbath/spin_ops.hpp"

namespace spinbath {

struct QuadrupoleParams {
  double nu_q_MHz = 0.0;  // quadrupolar frequency, >= 0
  double eta = 0.0;       // asymmetry, [0, 1)
  double theta = 0.0;     // EFG principal axis polar angle vs the field axis
  double phi = 0.0;       // azimuth
};

struct SpeciesParams {
  NuclearSpecies species;
  double abundance_fraction = 0.0;  // fraction of all bath nuclei
  double nu_q_mean_MHz = 0.0;
  double nu_q_sigma_MHz = 0.0;
};

struct BathConfig {
  double b_ext_T = 4.0;
  double sigma_oh_mT = 33.0;  // total-vector Overhauser standard deviation
  std::vector<SpeciesParams> species;
  double tilt_sigma_rad = 15.0 * 3.14159265358979323846 / 180.0;
  double eta = 0.2;
  int n_nuclei = 20000;
  double gamma_e_GHz_per_T = 6.3;
  uint64_t seed = 1;

  /// Per-component Overhauser variance (isotropic convention), mT^2.
  double component_variance() const {
    return sigma_oh_mT * sigma_oh_mT / 3.0;
  }
  /// Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

struct NucleusRealization {
  int species_index = 0;  // into BathConfig::species
  QuadrupoleParams qp;
  double coupling_mT = 0.0;  // field per unit spin projection
};

struct BathSample {
  std::vector<NucleusRealization> nuclei;
  uint64_t seed = 0;
};

/// Spec defaults for In(0.5)Ga(0.5)As: cation fractions are half the natural
/// isotope abundance, the anion site is As; fractions normalized to 1.
/// nu_q_mean is gamma_n x 1 T scaled by nu_q_scale, nu_q_sigma half of that.
BathConfig default_bath_config(const std::vector<NuclearSpecies>& table, double nu_q_scale = 1.0);

/// H = -gamma_n B iz + (nu_q/6) [3 iz'^2 - I(I+1) + eta (ix'^2 - iy'^2)],
/// primed operators tilted to the EFG axis. MHz units, lab z along the field.
Matrix nuclear_hamiltonian(const NuclearSpecies& species, double b_ext_T,
                           const QuadrupoleParams& qp);

/// The (species, nu_q, axes) draw for bath position `index`; deterministic in
/// (config.seed, index) only. Shared by sample_bath and the spectral sampler.
NucleusRealization draw_nucleus(const BathConfig& config, uint64_t index);

/// n_nuclei independent draws plus normalize_couplings.
BathSample sample_bath(const BathConfig& config);

/// a_k = g * hyperfine_weight(species_k) with g solving
/// sum a_k^2 I_k(I_k+1)/3 = (sigma_oh/sqrt(3))^2 exactly on this sample.
void normalize_couplings(BathSample& sample, const BathConfig& config, double sigma_oh_mT);

/// Expected-value coupling scale g for the configured composition (used when
/// integrating over the distribution rather than a concrete sample).
double expected_coupling_scale(const BathConfig& config);

inline double spin_variance(double spin) { return spin * (spin + 1.0) / 3.0; }

}  // namespace spinbath
