#pragma once

#include <complex>
#include <string>
#include <vector>

namespace spinbath {

enum class SequenceKind { ramsey, hahn, cpmg, custom };

/// Ideal-pi switching-function view of a pulse sequence: y(t) starts at +1
/// and flips sign at every pulse time.
struct PulseSequence {
  double total_time_ns = 0.0;
  std::vector<double> pulse_times_ns;  // strictly inside (0, T), ascending
  double pulse_fidelity = 1.0;
  SequenceKind kind = SequenceKind::custom;

  static PulseSequence ramsey(double total_time_ns, double fidelity = 1.0);
  static PulseSequence hahn(double total_time_ns, double fidelity = 1.0);
  static PulseSequence cpmg(int n_pulses, double total_time_ns, double fidelity = 1.0);
  static PulseSequence custom(double total_time_ns, std::vector<double> pulse_times_ns,
                              double fidelity = 1.0);

  int n_pulses() const { return static_cast<int>(pulse_times_ns.size()); }
  /// fidelity^(pulses + 1): the echo amplitude left after imperfect rotations.
  double visibility_prefactor() const;
  void validate() const;
};

/// f~(nu) = integral_0^T y(t) exp(i 2 pi nu t) dt, closed form per segment
/// (nu in MHz, t in ns, result in ns).
std::complex<double> filter_transform(const PulseSequence& seq, double nu_MHz);

/// |f~(nu)|^2 in ns^2.
double filter_magnitude(const PulseSequence& seq, double nu_MHz);

std::string sequence_name(const PulseSequence& seq);

}  // namespace spinbath
