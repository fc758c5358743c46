#include "spinbath/filter.hpp"

#include <cmath>
#include <stdexcept>

#include "spinbath/units.hpp"

namespace spinbath {

PulseSequence PulseSequence::ramsey(double total_time_ns, double fidelity) {
  PulseSequence seq{total_time_ns, {}, fidelity, SequenceKind::ramsey};
  seq.validate();
  return seq;
}

PulseSequence PulseSequence::hahn(double total_time_ns, double fidelity) {
  PulseSequence seq{total_time_ns, {0.5 * total_time_ns}, fidelity, SequenceKind::hahn};
  seq.validate();
  return seq;
}

PulseSequence PulseSequence::cpmg(int n_pulses, double total_time_ns, double fidelity) {
  if (n_pulses < 1) throw std::invalid_argument("cpmg: need at least one pulse");
  PulseSequence seq{total_time_ns, {}, fidelity, SequenceKind::cpmg};
  for (int j = 1; j <= n_pulses; ++j) {
    seq.pulse_times_ns.push_back(total_time_ns * (2.0 * j - 1.0) / (2.0 * n_pulses));
  }
  seq.validate();
  return seq;
}

PulseSequence PulseSequence::custom(double total_time_ns, std::vector<double> pulse_times_ns,
                                    double fidelity) {
  PulseSequence seq{total_time_ns, std::move(pulse_times_ns), fidelity, SequenceKind::custom};
  seq.validate();
  return seq;
}

double PulseSequence::visibility_prefactor() const {
  return std::pow(pulse_fidelity, n_pulses() + 1);
}

void PulseSequence::validate() const {
  if (total_time_ns <= 0.0) throw std::invalid_argument("PulseSequence: total time must be > 0");
  if (pulse_fidelity <= 0.0 || pulse_fidelity > 1.0)
    throw std::invalid_argument("PulseSequence: fidelity must be in (0, 1]");
  double prev = 0.0;
  for (double t : pulse_times_ns) {
    if (t <= prev || t >= total_time_ns)
      throw std::invalid_argument("PulseSequence: pulse times must ascend strictly inside (0, T)");
    prev = t;
  }
}

std::complex<double> filter_transform(const PulseSequence& seq, double nu_MHz) {
  const double omega = kRadPerMHzNs * nu_MHz;  // rad per ns
  std::complex<double> acc(0.0, 0.0);
  double t_prev = 0.0;
  double sign = 1.0;
  auto segment = [&](double t0, double t1) {
    // integral of exp(i w t) over [t0, t1] = len * exp(i w mid) * sinc(w len / 2)
    const double len = t1 - t0;
    const double half = 0.5 * omega * len;
    const double sinc = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
    return len * sinc * std::polar(1.0, 0.5 * omega * (t0 + t1));
  };
  for (double tp : seq.pulse_times_ns) {
    acc += sign * segment(t_prev, tp);
    t_prev = tp;
    sign = -sign;
  }
  acc += sign * segment(t_prev, seq.total_time_ns);
  return acc;
}

double filter_magnitude(const PulseSequence& seq, double nu_MHz) {
  return std::norm(filter_transform(seq, nu_MHz));
}

std::string sequence_name(const PulseSequence& seq) {
  switch (seq.kind) {
    case SequenceKind::ramsey:
      return "ramsey";
    case SequenceKind::hahn:
      return "hahn";
    case SequenceKind::cpmg:
      return "cpmg" + std::to_string(seq.n_pulses());
    case SequenceKind::custom:
      return "custom";
  }
  return "custom";
}

}  // namespace spinbath
