#include "xpm/cpg.hpp"

#include <cmath>
#include <sstream>

#include "xpm/errors.hpp"
#include "xpm/quadrature.hpp"

namespace xpm {

TwoQubitState::TwoQubitState(const std::array<cx, 4>& amplitudes)
    : c(amplitudes) {
  double norm2 = 0.0;
  for (const cx& a : c) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw validation_error("two-qubit state is not normalized");
}

TwoQubitState TwoQubitState::balanced() {
  return TwoQubitState({cx(0.5), cx(0.5), cx(0.5), cx(0.5)});
}

NoiseMatrix::NoiseMatrix(const Mat4& m) : n_(m) {
  if (m.hermiticity_defect() > 1e-12)
    throw validation_error("noise matrix must be Hermitian");
  for (int i = 0; i < 4; ++i)
    if (std::abs(m(i, i) - cx(1.0)) > 1e-12)
      throw validation_error("noise matrix diagonal must be 1");
}

NoiseMatrix NoiseMatrix::all_ones() {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = 1.0;
  return NoiseMatrix(m);
}

NoiseMatrix build_noise_matrix(const DecoherenceParams& p) {
  constexpr double kMagTol = 1.0 + 1e-9;
  for (const cx* v : {&p.c1, &p.c2, &p.n0011, &p.n0110}) {
    if (std::abs(*v) > kMagTol)
      throw validation_error(
          "noise parameters must have magnitude <= 1, got |z| = " +
          std::to_string(std::abs(*v)));
  }
  const cx mismatch = std::polar(1.0, p.dphi);
  Mat4 n;
  for (int i = 0; i < 4; ++i) n(i, i) = 1.0;
  n(0, 1) = p.c2;
  n(0, 2) = p.c1 * mismatch;
  n(0, 3) = p.n0011;
  n(1, 2) = p.n0110;
  n(1, 3) = p.c1;
  n(2, 3) = p.c2;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) n(i, j) = std::conj(n(j, i));
  return NoiseMatrix(n);
}

namespace {

// Phase-shifted amplitudes u_ij = c_ij e^{-i m_ij phi2} with m_ij = i(1-j);
// the ideal gate output is the rank-1 matrix u u†.
std::array<cx, 4> shifted_amplitudes(const TwoQubitState& state, double phi2) {
  std::array<cx, 4> u;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const int idx = 2 * i + j;
      u[idx] = state.c[idx] * std::polar(1.0, -cpg_phase_power(i, j) * phi2);
    }
  return u;
}

}  // namespace

DensityMatrix4 unitary_cpg_rho(const TwoQubitState& state, double phi2) {
  const auto u = shifted_amplitudes(state, phi2);
  Mat4 rho;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rho(a, b) = u[a] * std::conj(u[b]);
  return DensityMatrix4(rho);
}

namespace detail {

Mat4 noisy_cpg_rho_raw(const TwoQubitState& state, double phi2,
                       const Mat4& noise) {
  const auto u = shifted_amplitudes(state, phi2);
  Mat4 rho;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rho(a, b) = u[a] * std::conj(u[b]) * noise(a, b);
  return rho;
}

}  // namespace detail

DensityMatrix4 noisy_cpg_rho(const TwoQubitState& state, double phi2,
                             const NoiseMatrix& noise) {
  const Mat4 rho = detail::noisy_cpg_rho_raw(state, phi2, noise.matrix());
  if (!DensityMatrix4::is_physical(rho))
    throw numerical_error(
        "unphysical noise parameters: resulting state is not a density "
        "matrix");
  return DensityMatrix4(rho);
}

namespace {

// Gate phase factor against the relative pulse coordinate u = z2 - z1.
cx window_phase(const MediumConfig& medium, double separation, double shift,
                double u) {
  const double theta =
      medium.pot(2).theta(separation + u, shift);
  return std::polar(1.0, -medium.eta() * medium.v2() / medium.delta_v() *
                             theta);
}

}  // namespace

cx x_factor_integral(const TwoQubitState& state, const PulseMode& pulse1,
                     const PulseMode& pulse2, const MediumConfig& medium,
                     const TimeBinConfig& tb, int i, int j,
                     int quadrature_order) {
  if (i < 0 || i > 1 || j < 0 || j > 1)
    throw validation_error("logical indices must be 0 or 1");
  tb.require_cpg_window(medium);

  const cx amplitude = state.c[2 * i + j];
  const double shift = medium.delta_v() * tb.t;
  // Center-to-center separation entering θ2; pulse deviations ride on top.
  const double separation = pulse2.center() - pulse1.center() +
                            tb.dz * (j - i);

  const bool g1 = pulse1.kind() == PulseMode::Kind::gaussian;
  const bool g2 = pulse2.kind() == PulseMode::Kind::gaussian;

  const auto evaluate = [&](int order) -> cx {
    if (!g1 && !g2) return window_phase(medium, separation, shift, 0.0);
    const GaussHermiteRule& rule = gauss_hermite(order);
    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    if (g1 != g2) {
      const double sigma = g1 ? pulse1.sigma() : pulse2.sigma();
      const double sign = g1 ? -1.0 : 1.0;  // u = z2 - z1
      cx sum = 0.0;
      for (size_t a = 0; a < rule.nodes.size(); ++a)
        sum += rule.weights[a] *
               window_phase(medium, separation, shift,
                            sign * sigma * rule.nodes[a]);
      return inv_sqrt_pi * sum;
    }
    const double s1 = pulse1.sigma();
    const double s2 = pulse2.sigma();
    cx sum = 0.0;
    for (size_t a = 0; a < rule.nodes.size(); ++a) {
      cx inner = 0.0;
      for (size_t b = 0; b < rule.nodes.size(); ++b)
        inner += rule.weights[b] *
                 window_phase(medium, separation, shift,
                              s2 * rule.nodes[b] - s1 * rule.nodes[a]);
      sum += rule.weights[a] * inner;
    }
    return inv_sqrt_pi * inv_sqrt_pi * sum;
  };

  const cx coarse = evaluate(quadrature_order);
  if (!g1 && !g2) return amplitude * coarse;
  const cx fine = evaluate(quadrature_order + 32);
  const double err = std::abs(fine - coarse);
  if (err > 1e-6) {
    std::ostringstream msg;
    msg << "gate amplitude quadrature did not converge: achieved " << err
        << " at orders " << quadrature_order << "/" << quadrature_order + 32;
    throw numerical_error(msg.str());
  }
  return amplitude * fine;
}

}  // namespace xpm
