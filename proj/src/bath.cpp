#include "spinbath/bath.hpp"

#include <cmath>
#include <stdexcept>

#include "spinbath/rng.hpp"
#include "spinbath/units.hpp"

namespace spinbath {

void BathConfig::validate() const {
  if (b_ext_T <= 0.0) throw std::invalid_argument("BathConfig: b_ext must be positive");
  if (sigma_oh_mT <= 0.0) throw std::invalid_argument("BathConfig: sigma_oh must be positive");
  if (n_nuclei < 100) throw std::invalid_argument("BathConfig: n_nuclei must be >= 100");
  if (species.empty()) throw std::invalid_argument("BathConfig: no species");
  double total = 0.0;
  for (const auto& sp : species) {
    if (sp.abundance_fraction < 0.0)
      throw std::invalid_argument("BathConfig: negative abundance fraction");
    if (sp.nu_q_mean_MHz < 0.0 || sp.nu_q_sigma_MHz < 0.0)
      throw std::invalid_argument("BathConfig: negative quadrupolar parameters");
    total += sp.abundance_fraction;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("BathConfig: abundance fractions must sum to 1");
  if (eta < 0.0 || eta >= 1.0) throw std::invalid_argument("BathConfig: eta must be in [0,1)");
}

BathConfig default_bath_config(const std::vector<NuclearSpecies>& table, double nu_q_scale) {
  BathConfig config;
  config.species.clear();
  double total = 0.0;
  for (const auto& iso : table) {
    SpeciesParams sp;
    sp.species = iso;
    sp.abundance_fraction = (iso.name == "As75") ? 0.5 : 0.5 * iso.natural_abundance;
    sp.nu_q_mean_MHz = nu_q_scale * iso.gamma_n_MHz_per_T * 1.0;
    sp.nu_q_sigma_MHz = 0.5 * sp.nu_q_mean_MHz;
    total += sp.abundance_fraction;
    config.species.push_back(std::move(sp));
  }
  for (auto& sp : config.species) sp.abundance_fraction /= total;
  return config;
}

Matrix nuclear_hamiltonian(const NuclearSpecies& species, double b_ext_T,
                           const QuadrupoleParams& qp) {
  if (qp.nu_q_MHz < 0.0) throw std::invalid_argument("nuclear_hamiltonian: nu_q must be >= 0");
  if (qp.eta < 0.0 || qp.eta >= 1.0)
    throw std::invalid_argument("nuclear_hamiltonian: eta must be in [0,1)");
  const SpinOperators ops = spin_operators(species.spin);
  Matrix h = -species.gamma_n_MHz_per_T * b_ext_T * ops.iz;
  if (qp.nu_q_MHz > 0.0) {
    const SpinOperators efg = tilt_operators(ops, qp.theta, qp.phi);
    const double casimir = species.spin * (species.spin + 1.0);
    Matrix quad = 3.0 * (efg.iz * efg.iz);
    quad -= casimir * Matrix::Identity(ops.dim, ops.dim);
    quad += qp.eta * (efg.ix * efg.ix - efg.iy * efg.iy);
    h += (qp.nu_q_MHz / 6.0) * quad;
  }
  return h;
}

NucleusRealization draw_nucleus(const BathConfig& config, uint64_t index) {
  SubstreamRng rng(config.seed, index);
  NucleusRealization n;
  const double u = rng.uniform();
  double cumulative = 0.0;
  n.species_index = static_cast<int>(config.species.size()) - 1;
  for (size_t s = 0; s < config.species.size(); ++s) {
    cumulative += config.species[s].abundance_fraction;
    if (u < cumulative) {
      n.species_index = static_cast<int>(s);
      break;
    }
  }
  const SpeciesParams& sp = config.species[n.species_index];
  n.qp.nu_q_MHz = rng.truncated_gaussian(sp.nu_q_mean_MHz, sp.nu_q_sigma_MHz);
  n.qp.eta = config.eta;
  n.qp.theta = 0.5 * kPi + config.tilt_sigma_rad * rng.gaussian();
  n.qp.phi = kTwoPi * rng.uniform();
  n.coupling_mT = 0.0;
  return n;
}

BathSample sample_bath(const BathConfig& config) {
  config.validate();
  BathSample sample;
  sample.seed = config.seed;
  sample.nuclei.resize(config.n_nuclei);
  for (int k = 0; k < config.n_nuclei; ++k) {
    sample.nuclei[k] = draw_nucleus(config, static_cast<uint64_t>(k));
  }
  normalize_couplings(sample, config, config.sigma_oh_mT);
  return sample;
}

void normalize_couplings(BathSample& sample, const BathConfig& config, double sigma_oh_mT) {
  if (sample.nuclei.empty()) throw std::invalid_argument("normalize_couplings: empty sample");
  double weighted = 0.0;
  for (const auto& n : sample.nuclei) {
    const auto& sp = config.species[n.species_index];
    weighted += sp.species.hyperfine_weight * sp.species.hyperfine_weight *
                spin_variance(sp.species.spin);
  }
  if (weighted <= 0.0) throw std::invalid_argument("normalize_couplings: all-zero weights");
  const double target = sigma_oh_mT * sigma_oh_mT / 3.0;  // per field component
  const double g = std::sqrt(target / weighted);
  for (auto& n : sample.nuclei) {
    n.coupling_mT = g * config.species[n.species_index].species.hyperfine_weight;
  }
}

double expected_coupling_scale(const BathConfig& config) {
  double weighted = 0.0;
  for (const auto& sp : config.species) {
    weighted += sp.abundance_fraction * sp.species.hyperfine_weight *
                sp.species.hyperfine_weight * spin_variance(sp.species.spin);
  }
  if (weighted <= 0.0) throw std::invalid_argument("expected_coupling_scale: all-zero weights");
  const double target = config.sigma_oh_mT * config.sigma_oh_mT / 3.0;
  return std::sqrt(target / (config.n_nuclei * weighted));
}

}  // namespace spinbath
