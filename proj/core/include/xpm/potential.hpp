#pragma once

#include <string>

namespace xpm {

enum class PotentialKind { gaussian, top_hat, delta_limit };

// Spatially nonlocal interaction kernel V(z) between two co-propagating
// pulses. Three shapes are supported:
//
//   gaussian:    V(z) = V0 exp(-z²/w²)
//   top_hat:     V(z) = V0 for |z| <= r, 0 otherwise
//   delta_limit: V(z) = 𝒱 δ(z); only the integral and the running integral
//                θ are defined, there is no pointwise value.
//
// The running integral θ(z1, z2) = ∫₀^{z2} V(z1 - z') dz' sets the phase a
// pulse picks up while overtaking the other. For a symmetric kernel it is
// antisymmetric, θ(-z1, -z2) = -θ(z1, z2), and forms a plateau of height
// ±𝒱 between the lines z1 = 0 and z1 = z2.
class Potential {
 public:
  static Potential gaussian(double amplitude, double width);
  static Potential top_hat(double amplitude, double half_width);
  static Potential delta_limit(double strength);

  PotentialKind kind() const { return kind_; }

  // V0 for gaussian/top_hat, 𝒱 for delta_limit.
  double amplitude() const { return amp_; }
  // w (gaussian) or r (top_hat); throws for delta_limit.
  double width() const;

  // Pointwise value V(z). Zero beyond 8 widths (numerical support cutoff).
  // Throws validation_error for delta_limit.
  double eval(double z) const;

  // 𝒱 = ∫ V dz. Closed form for every shape.
  double integral() const;

  // θ(z1, z2) = ∫₀^{z2} V(z1 - z') dz', in closed form.
  double theta(double z1, double z2) const;

  // Plateau approximation 𝒱·[step(z1)step(z2-z1) - step(-z1)step(z1-z2)],
  // with step(0) = 1/2 so edges match the smooth closed forms.
  double theta_plateau(double z1, double z2) const;

  // Radius beyond which eval() is treated as zero (8 widths; 0 for delta).
  double support_radius() const;

  // Kernel with pointwise values scaled by 1/s (same shape).
  Potential scaled_amplitude(double s) const;

  std::string describe() const;

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  Potential(PotentialKind kind, double amp, double width)
      : kind_(kind), amp_(amp), width_(width) {}

  PotentialKind kind_;
  double amp_;
  double width_;  // unused (0) for delta_limit
};

}  // namespace xpm
