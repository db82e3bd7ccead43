#pragma once

#include <array>

#include "xpm/linalg4.hpp"
#include "xpm/medium.hpp"

namespace xpm {

// Pure two-qubit input state, amplitudes in basis order (00, 01, 10, 11).
struct TwoQubitState {
  std::array<cx, 4> c;

  explicit TwoQubitState(const std::array<cx, 4>& amplitudes);
  // c_ij = 1/2 for all ij: the product state ((|0⟩+|1⟩)⊗(|0⟩+|1⟩))/2.
  static TwoQubitState balanced();
};

// Exponent of the gate phase for logical index (i, j): only |10⟩ picks up
// the cross-phase shift, so m = i(1-j).
inline int cpg_phase_power(int i, int j) { return i * (1 - j); }

// Four complex numbers which, together with the phase mismatch
// dphi = phi1 - phi2, fully determine the short-pulse decoherence matrix.
struct DecoherenceParams {
  cx c1;
  cx c2;
  cx n0011;
  cx n0110;
  double dphi = 0.0;
};

// Hermitian decoherence matrix N with unit diagonal:
//
//       1           c2          c1 e^{i dphi}   n0011
//       c2*         1           n0110           c1
//       c1* e^{-i}  n0110*      1               c2
//       n0011*      c1*         c2*             1
//
// Multiplied entrywise onto the ideal gate output.
class NoiseMatrix {
 public:
  explicit NoiseMatrix(const Mat4& m);
  static NoiseMatrix all_ones();

  const Mat4& matrix() const { return n_; }
  cx operator()(int r, int c) const { return n_(r, c); }

 private:
  Mat4 n_;
};

// Builds the decoherence matrix from its four parameters. Throws
// validation_error when any magnitude exceeds 1.
NoiseMatrix build_noise_matrix(const DecoherenceParams& params);

// Ideal gate output: rank-1 density matrix of the phase-shifted amplitudes,
//   rho_{ij;kl} = c_ij c_kl* e^{-i (m_ij - m_kl) phi2}.
DensityMatrix4 unitary_cpg_rho(const TwoQubitState& state, double phi2);

// Gate output under decoherence: entrywise product of the unitary output
// with the noise matrix. Throws numerical_error when the result fails the
// density-matrix invariants ("unphysical noise parameters").
DensityMatrix4 noisy_cpg_rho(const TwoQubitState& state, double phi2,
                             const NoiseMatrix& noise);

namespace detail {
// Entrywise product without the physicality check (sampling loops validate
// via eigenvalues themselves).
Mat4 noisy_cpg_rho_raw(const TwoQubitState& state, double phi2,
                       const Mat4& noise);
}  // namespace detail

// Wavepacket-resolved gate amplitude for logical index (i, j):
//
//   X_ij = c_ij ∫∫ dz1 dz2 |ψ1(z1) ψ2(z2 + d)|²
//          e^{-i eta (v2/Δv) θ2(z2 - z1 + d + dz·j - dz·i, Δv t)}
//
// evaluated by tensor-product Gauss-Hermite quadrature against the Gaussian
// pulse weights (point pulses collapse the corresponding integral). Inside
// the gate window this reduces to c_ij e^{-i i(1-j) phi2}.
//
// Throws validation_error when the window condition fails and
// numerical_error when the quadrature does not converge.
cx x_factor_integral(const TwoQubitState& state, const PulseMode& pulse1,
                     const PulseMode& pulse2, const MediumConfig& medium,
                     const TimeBinConfig& tb, int i, int j,
                     int quadrature_order = 64);

}  // namespace xpm
