#include "spinbath/isotopes.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spinbath/errors.hpp"

#ifndef SPINBATH_DATA_DIR
#define SPINBATH_DATA_DIR "."
#endif

namespace spinbath {

std::vector<NuclearSpecies> load_isotope_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open isotope table: " + path);
  std::vector<NuclearSpecies> table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    NuclearSpecies s;
    if (!(row >> s.name)) continue;  // blank line
    if (!(row >> s.spin >> s.gamma_n_MHz_per_T >> s.natural_abundance >> s.hyperfine_weight)) {
      throw ConfigError("isotope table " + path + " line " + std::to_string(lineno) +
                        ": expected `name spin gamma abundance weight`");
    }
    if (s.gamma_n_MHz_per_T <= 0.0) {
      throw ConfigError("isotope table: gamma_n must be positive for " + s.name);
    }
    table.push_back(std::move(s));
  }
  if (table.empty()) throw ConfigError("isotope table " + path + " has no rows");
  return table;
}

std::string default_isotope_path() {
  if (const char* env = std::getenv("SPINBATH_ISOTOPES")) return env;
  return std::string(SPINBATH_DATA_DIR) + "/isotopes.txt";
}

}  // namespace spinbath
