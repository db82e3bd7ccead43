#include "xpm/medium.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "xpm/errors.hpp"

namespace xpm {

PulseMode PulseMode::gaussian(double center, double sigma) {
  if (!(sigma > 0.0)) throw validation_error("pulse mode: sigma must be > 0");
  if (!std::isfinite(center))
    throw validation_error("pulse mode: center must be finite");
  return PulseMode(Kind::gaussian, center, sigma);
}

PulseMode PulseMode::point(double center) {
  if (!std::isfinite(center))
    throw validation_error("pulse mode: center must be finite");
  return PulseMode(Kind::point, center, 0.0);
}

double PulseMode::eval(double z) const {
  if (kind_ == Kind::point)
    throw validation_error("point pulse has no pointwise mode value");
  const double u = (z - center_) / sigma_;
  return std::pow(std::numbers::pi * sigma_ * sigma_, -0.25) *
         std::exp(-0.5 * u * u);
}

double PulseMode::density(double z) const {
  if (kind_ == Kind::point)
    throw validation_error("point pulse has no pointwise density");
  const double u = (z - center_) / sigma_;
  return std::exp(-u * u) / (sigma_ * std::sqrt(std::numbers::pi));
}

double PulseMode::support_radius() const {
  return kind_ == Kind::point ? 0.0 : 8.0 * sigma_;
}

MediumConfig::MediumConfig(double v1, double v2, double eta, Potential pot1,
                           Potential pot2)
    : v1_(v1), v2_(v2), eta_(eta), pot1_(pot1), pot2_(pot2) {
  if (!(v2 > 0.0) || !(v1 > v2)) {
    std::ostringstream msg;
    msg << "medium: group velocities must satisfy v1 > v2 > 0 (got v1=" << v1
        << ", v2=" << v2 << ")";
    throw validation_error(msg.str());
  }
  if (!(eta > 0.0)) throw validation_error("medium: eta must be > 0");
}

MediumConfig MediumConfig::unitary(double v1, double v2, double eta,
                                   const Potential& shared_kernel) {
  return MediumConfig(v1, v2, eta, shared_kernel.scaled_amplitude(v1),
                      shared_kernel.scaled_amplitude(v2));
}

const Potential& MediumConfig::pot(int pulse_index) const {
  if (pulse_index == 1) return pot1_;
  if (pulse_index == 2) return pot2_;
  throw validation_error("pulse index must be 1 or 2");
}

double MediumConfig::phi(int pulse_index) const {
  const double v = pulse_index == 1 ? v1_ : v2_;
  return eta_ * v * pot(pulse_index).integral() / delta_v();
}

double MediumConfig::phase_mismatch(double dz, double t) const {
  const double dv = delta_v();
  const double z1 = dz + dv * t;
  const double z2 = dv * t;
  return eta_ / dv * (v1_ * pot1_.theta(z1, z2) - v2_ * pot2_.theta(z1, z2));
}

bool MediumConfig::is_unitary(double rel_tol) const {
  if (pot1_.kind() != pot2_.kind()) return false;
  const double a1 = v1_ * pot1_.amplitude();
  const double a2 = v2_ * pot2_.amplitude();
  const double amp_scale = std::max({std::abs(a1), std::abs(a2), 1e-300});
  if (std::abs(a1 - a2) > rel_tol * amp_scale) return false;
  if (pot1_.kind() == PotentialKind::delta_limit) return true;
  const double w1 = pot1_.width();
  const double w2 = pot2_.width();
  return std::abs(w1 - w2) <= rel_tol * std::max(w1, w2);
}

TimeBinConfig::TimeBinConfig(double d_, double dz_, double t_)
    : d(d_), dz(dz_), t(t_) {
  if (!(d > 0.0)) throw validation_error("time-bin: d must be > 0");
  if (!(dz > 0.0)) throw validation_error("time-bin: dz must be > 0");
  if (!(t > 0.0)) throw validation_error("time-bin: t must be > 0");
}

bool TimeBinConfig::cpg_window(const MediumConfig& medium) const {
  const double shift = medium.delta_v() * t;
  return d > dz && d - dz < shift && shift < d;
}

void TimeBinConfig::require_cpg_window(const MediumConfig& medium) const {
  if (cpg_window(medium)) return;
  std::ostringstream msg;
  msg << "gate window violated: need 0 < d - dz < dv*t < d, got d=" << d
      << ", dz=" << dz << ", dv*t=" << medium.delta_v() * t;
  throw validation_error(msg.str());
}

}  // namespace xpm
