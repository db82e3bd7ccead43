#pragma once

#include "xpm/linalg4.hpp"
#include "xpm/medium.hpp"

namespace xpm {

// Geometry of a photon-number measurement: a classical probe pulse with
// coherent amplitude alpha in mode 1 (centered at 0) and an n-photon signal
// pulse in mode 2 (centered at d > 0). The probe is faster and overtakes
// the signal after the interaction time t.
struct QndSetup {
  cx alpha;
  int n;
  PulseMode pulse1;
  PulseMode pulse2;
  double d;
  double t;

  QndSetup(cx alpha, int n, PulseMode pulse1, PulseMode pulse2, double d,
           double t);

  // True once the relative displacement clears the initial separation plus
  // both pulse widths: Δv·t >= d + 6(σ1 + σ2). Callers may warn otherwise;
  // the signal is still computable.
  bool fully_overtaken(const MediumConfig& medium) const;
};

// Probe-field expectation value at position z and time t:
//
//   ⟨E1(z,t)⟩ = alpha √eta ψ1(z - v1 t) ·
//               ( ∫ dz' |ψ2(z')|² e^{-i eta (v1/Δv) θ1(z' - z + v1 t, Δv t)} )^n
//
// Once the probe has fully overtaken the signal, the bracket sits on the
// θ plateau and the phase becomes -n·phi1.
cx qnd_signal(const QndSetup& setup, const MediumConfig& medium, double z);

// Plateau closed form at the probe center z = v1 t:
//   ⟨E1⟩ = alpha √eta ψ1(0) e^{-i n phi1}.
// Requires full overtaking (Δv·t > d + support of ψ2); throws otherwise.
cx qnd_signal_plateau(const QndSetup& setup, const MediumConfig& medium);

// Decoherence amplitude of pulse i for the harmonic-bath model with equal
// kernels V1 = V2 = V:
//   ⟨R_i⟩ = exp( -(eta/4) (v_i / v_{3-i}) Δv t V(0) ).
// Throws for unequal kernels, and for delta kernels, whose zero-range limit
// carries diverging fluctuations.
double mean_R(const MediumConfig& medium, int pulse_index, double t);

// Measurement signal with the decoherence contrast factor ⟨R1⟩ applied.
cx qnd_signal_decohered(const QndSetup& setup, const MediumConfig& medium,
                        double z);

}  // namespace xpm
