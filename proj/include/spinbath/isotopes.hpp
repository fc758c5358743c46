#pragma once

#include <string>
#include <vector>

namespace spinbath {

struct NuclearSpecies {
  std::string name;            // Ga69, Ga71, As75, In115
  double spin = 0.0;           // half-integer
  double gamma_n_MHz_per_T = 0.0;  // linear frequency per tesla
  double natural_abundance = 0.0;  // fraction of the element, [0, 1]
  double hyperfine_weight = 0.0;   // relative per-nucleus coupling strength
};

/// Parses the plain-text isotope table: one row per isotope,
/// `name spin gamma_MHz_per_T natural_abundance hyperfine_weight`,
/// '#' starts a comment.
std::vector<NuclearSpecies> load_isotope_table(const std::string& path);

/// Resolution order: explicit path argument, $SPINBATH_ISOTOPES, then the
/// path configured at build time.
std::string default_isotope_path();

}  // namespace spinbath
