#include "xpm/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xpm/errors.hpp"

namespace xpm {

namespace {

constexpr double kSupportWidths = 8.0;

double step(double z) {
  if (z > 0.0) return 1.0;
  if (z < 0.0) return 0.0;
  return 0.5;
}

}  // namespace

Potential Potential::gaussian(double amplitude, double width) {
  if (!(amplitude >= 0.0))
    throw validation_error("gaussian kernel: amplitude must be >= 0");
  if (!(width > 0.0))
    throw validation_error("gaussian kernel: width must be > 0");
  return Potential(PotentialKind::gaussian, amplitude, width);
}

Potential Potential::top_hat(double amplitude, double half_width) {
  if (!(amplitude >= 0.0))
    throw validation_error("top-hat kernel: amplitude must be >= 0");
  if (!(half_width > 0.0))
    throw validation_error("top-hat kernel: half-width must be > 0");
  return Potential(PotentialKind::top_hat, amplitude, half_width);
}

Potential Potential::delta_limit(double strength) {
  if (!std::isfinite(strength))
    throw validation_error("delta kernel: strength must be finite");
  return Potential(PotentialKind::delta_limit, strength, 0.0);
}

double Potential::width() const {
  if (kind_ == PotentialKind::delta_limit)
    throw validation_error("delta kernel has no width");
  return width_;
}

double Potential::eval(double z) const {
  switch (kind_) {
    case PotentialKind::gaussian: {
      if (std::abs(z) > kSupportWidths * width_) return 0.0;
      const double u = z / width_;
      return amp_ * std::exp(-u * u);
    }
    case PotentialKind::top_hat:
      return std::abs(z) <= width_ ? amp_ : 0.0;
    case PotentialKind::delta_limit:
      throw validation_error("delta kernel has no pointwise evaluation");
  }
  throw validation_error("unknown kernel kind");
}

double Potential::integral() const {
  switch (kind_) {
    case PotentialKind::gaussian:
      return amp_ * width_ * std::sqrt(std::numbers::pi);
    case PotentialKind::top_hat:
      return 2.0 * amp_ * width_;
    case PotentialKind::delta_limit:
      return amp_;
  }
  throw validation_error("unknown kernel kind");
}

double Potential::theta(double z1, double z2) const {
  switch (kind_) {
    case PotentialKind::gaussian: {
      // ∫₀^{z2} V0 e^{-(z1-z')²/w²} dz'
      //   = (V0 w √π / 2) [erf(z1/w) - erf((z1-z2)/w)]
      const double half = 0.5 * amp_ * width_ * std::sqrt(std::numbers::pi);
      return half * (std::erf(z1 / width_) - std::erf((z1 - z2) / width_));
    }
    case PotentialKind::top_hat: {
      // Signed overlap of [z1 - r, z1 + r] with the oriented interval
      // [0, z2]; piecewise linear in both arguments.
      const double lo = std::min(0.0, z2);
      const double hi = std::max(0.0, z2);
      const double overlap =
          std::max(0.0, std::min(hi, z1 + width_) - std::max(lo, z1 - width_));
      return (z2 >= 0.0 ? 1.0 : -1.0) * amp_ * overlap;
    }
    case PotentialKind::delta_limit:
      return theta_plateau(z1, z2);
  }
  throw validation_error("unknown kernel kind");
}

double Potential::theta_plateau(double z1, double z2) const {
  const double v = integral();
  return v * (step(z1) * step(z2 - z1) - step(-z1) * step(z1 - z2));
}

double Potential::support_radius() const {
  switch (kind_) {
    case PotentialKind::gaussian:
      return kSupportWidths * width_;
    case PotentialKind::top_hat:
      return width_;
    case PotentialKind::delta_limit:
      return 0.0;
  }
  throw validation_error("unknown kernel kind");
}

Potential Potential::scaled_amplitude(double s) const {
  if (!(s > 0.0)) throw validation_error("kernel scale must be > 0");
  return Potential(kind_, amp_ / s, width_);
}

std::string Potential::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case PotentialKind::gaussian:
      out << "gaussian(V0=" << amp_ << ", w=" << width_ << ")";
      break;
    case PotentialKind::top_hat:
      out << "tophat(V0=" << amp_ << ", r=" << width_ << ")";
      break;
    case PotentialKind::delta_limit:
      out << "delta(strength=" << amp_ << ")";
      break;
  }
  return out.str();
}

}  // namespace xpm
