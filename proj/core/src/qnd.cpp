#include "xpm/qnd.hpp"

#include <cmath>
#include <sstream>

#include "xpm/errors.hpp"
#include "xpm/quadrature.hpp"

namespace xpm {

QndSetup::QndSetup(cx alpha_, int n_, PulseMode pulse1_, PulseMode pulse2_,
                   double d_, double t_)
    : alpha(alpha_),
      n(n_),
      pulse1(pulse1_),
      pulse2(pulse2_),
      d(d_),
      t(t_) {
  if (n < 0) throw validation_error("photon number must be >= 0");
  if (!(d > 0.0)) throw validation_error("pulse separation d must be > 0");
  if (!(t > 0.0)) throw validation_error("interaction time t must be > 0");
  if (pulse1.center() != 0.0)
    throw validation_error("probe pulse must be centered at 0");
  if (pulse2.center() != d)
    throw validation_error("signal pulse must be centered at d");
}

bool QndSetup::fully_overtaken(const MediumConfig& medium) const {
  return medium.delta_v() * t >= d + 6.0 * (pulse1.sigma() + pulse2.sigma());
}

namespace {

cx integer_power(cx base, int n) {
  cx out(1.0, 0.0);
  for (int k = 0; k < n; ++k) out *= base;
  return out;
}

// Average over the signal pulse of the phase imprinted on the probe:
//   B(z, t) = ∫ dz' |ψ2(z')|² e^{-i eta (v1/Δv) θ1(z' - z + v1 t, Δv t)}.
// Equal, by the antisymmetry of θ for symmetric kernels, to the form with
// e^{+i eta (v1/Δv) θ1(z - z' - v1 t, -Δv t)}.
cx probe_phase_average(const QndSetup& setup, const MediumConfig& medium,
                       double z) {
  const double rate = medium.eta() * medium.v1() / medium.delta_v();
  const double shift = medium.delta_v() * setup.t;
  const auto phase = [&](double zp) {
    return std::polar(1.0,
                      -rate * medium.pot(1).theta(zp - z + medium.v1() * setup.t,
                                                  shift));
  };
  if (setup.pulse2.kind() == PulseMode::Kind::point) return phase(setup.d);
  const double radius = setup.pulse2.support_radius();
  return integrate_adaptive(
      [&](double zp) { return setup.pulse2.density(zp) * phase(zp); },
      setup.d - radius, setup.d + radius, 1e-12);
}

}  // namespace

cx qnd_signal(const QndSetup& setup, const MediumConfig& medium, double z) {
  const cx prefactor = setup.alpha * std::sqrt(medium.eta()) *
                       setup.pulse1.eval(z - medium.v1() * setup.t);
  if (setup.n == 0) return prefactor;
  return prefactor * integer_power(probe_phase_average(setup, medium, z),
                                   setup.n);
}

cx qnd_signal_plateau(const QndSetup& setup, const MediumConfig& medium) {
  const double shift = medium.delta_v() * setup.t;
  const double needed = setup.d + setup.pulse2.support_radius();
  if (!(shift > needed)) {
    std::ostringstream msg;
    msg << "probe has not fully overtaken the signal pulse: dv*t = " << shift
        << " <= d + signal support = " << needed;
    throw validation_error(msg.str());
  }
  return setup.alpha * std::sqrt(medium.eta()) * setup.pulse1.eval(0.0) *
         std::polar(1.0, -setup.n * medium.phi(1));
}

double mean_R(const MediumConfig& medium, int pulse_index, double t) {
  if (pulse_index != 1 && pulse_index != 2)
    throw validation_error("pulse index must be 1 or 2");
  if (!(medium.pot(1) == medium.pot(2)))
    throw validation_error(
        "decoherence amplitude requires equal kernels V1 = V2");
  if (medium.pot(1).kind() == PotentialKind::delta_limit)
    throw validation_error(
        "delta kernel: diverging fluctuations, decoherence amplitude "
        "undefined");
  const double v_self = pulse_index == 1 ? medium.v1() : medium.v2();
  const double v_other = pulse_index == 1 ? medium.v2() : medium.v1();
  const double v0 = medium.pot(1).eval(0.0);
  return std::exp(-0.25 * medium.eta() * (v_self / v_other) *
                  medium.delta_v() * t * v0);
}

cx qnd_signal_decohered(const QndSetup& setup, const MediumConfig& medium,
                        double z) {
  return qnd_signal(setup, medium, z) * mean_R(medium, 1, setup.t);
}

}  // namespace xpm
