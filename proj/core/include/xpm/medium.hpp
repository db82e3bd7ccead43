#pragma once

#include "xpm/potential.hpp"

namespace xpm {

// Normalized longitudinal mode function of a light pulse.
//
//   gaussian: ψ(z) = (πσ²)^{-1/4} exp(-(z - center)²/(2σ²)),  ∫|ψ|² dz = 1
//   point:    δ-normalized sharp-pulse limit; |ψ|² acts as δ(z - center)
class PulseMode {
 public:
  enum class Kind { gaussian, point };

  static PulseMode gaussian(double center, double sigma);
  static PulseMode point(double center);

  Kind kind() const { return kind_; }
  double center() const { return center_; }
  double sigma() const { return sigma_; }  // 0 for point pulses

  // ψ(z); throws for point pulses (no pointwise value).
  double eval(double z) const;
  // |ψ(z)|²; throws for point pulses.
  double density(double z) const;
  // Half-width of the numerical support around center (8σ; 0 for point).
  double support_radius() const;

  friend bool operator==(const PulseMode&, const PulseMode&) = default;

 private:
  PulseMode(Kind kind, double center, double sigma)
      : kind_(kind), center_(center), sigma_(sigma) {}

  Kind kind_;
  double center_;
  double sigma_;
};

// Physical configuration of the nonlinear medium: group velocities
// v1 > v2 > 0, field-commutator constant eta > 0, and one interaction
// kernel per pulse. The per-pulse uniform phase shift is
//
//   phi_i = eta v_i 𝒱_i / (v1 - v2).
//
// The dynamics is unitary exactly when v1 V1(z) = v2 V2(z); the phases then
// coincide. Their difference phi(1) - phi(2) drives decoherence otherwise.
class MediumConfig {
 public:
  MediumConfig(double v1, double v2, double eta, Potential pot1,
               Potential pot2);

  // Both kernels derived from a single shape V via V_i(z) = V(z)/v_i,
  // which satisfies the unitarity condition by construction.
  static MediumConfig unitary(double v1, double v2, double eta,
                              const Potential& shared_kernel);

  double v1() const { return v1_; }
  double v2() const { return v2_; }
  double eta() const { return eta_; }
  double delta_v() const { return v1_ - v2_; }
  const Potential& pot(int pulse_index) const;

  // Uniform phase shift acquired by pulse i ∈ {1, 2}.
  double phi(int pulse_index) const;

  // Commutator phase mismatch accumulated between points separated by dz
  // after interaction time t:
  //   Phi(dz, t) = (eta/Δv)·[v1 θ1(dz + Δv t, Δv t) - v2 θ2(dz + Δv t, Δv t)]
  // Identically zero for unitary configurations.
  double phase_mismatch(double dz, double t) const;

  // Structural check of v1 V1 = v2 V2: same kernel shape, equal widths,
  // amplitudes scaled by the velocity ratio (relative tolerance).
  bool is_unitary(double rel_tol = 1e-12) const;

 private:
  double v1_, v2_, eta_;
  Potential pot1_, pot2_;
};

// Time-bin gate geometry: initial pulse separation d, time-bin offset dz,
// interaction time t. The controlled-phase window requires the relative
// displacement Δv·t to overtake the |10⟩ separation d - dz but none of the
// others:  0 < d - dz < Δv·t < d.
struct TimeBinConfig {
  double d;
  double dz;
  double t;

  TimeBinConfig(double d, double dz, double t);

  bool cpg_window(const MediumConfig& medium) const;
  // Throws validation_error when the window condition fails.
  void require_cpg_window(const MediumConfig& medium) const;
};

}  // namespace xpm
