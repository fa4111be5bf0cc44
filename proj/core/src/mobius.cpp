#include "gyro/mobius.hpp"

#include <cmath>
#include <sstream>

#include "gyro/error.hpp"
#include "gyro/sampling.hpp"

namespace gyro::mobius {

namespace {

void check_guard(const DiskPoint& a, double guard) {
  if (1.0 - a.modulus() < guard) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "disk point (" << a.re() << ", " << a.im() << ") is within " << guard
        << " of the unit circle";
    throw Error(ErrorKind::invalid_element, msg.str());
  }
}

}  // namespace

DiskPoint::DiskPoint(double re, double im) : z_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im) || !(std::abs(z_) < 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "(" << re << ", " << im << ") is not in the open unit disk";
    throw Error(ErrorKind::invalid_element, msg.str());
  }
}

Ball::Ball(double radius) : radius_(radius) {
  if (!(radius > 0.0 && radius < 1.0))
    throw Error(ErrorKind::invalid_argument, "ball radius must lie in (0, 1)");
}

DiskPoint mobius_add(const DiskPoint& a, const DiskPoint& b, double guard) {
  check_guard(a, guard);
  check_guard(b, guard);
  const std::complex<double> za = a.value();
  const std::complex<double> zb = b.value();
  return DiskPoint((za + zb) / (1.0 + std::conj(za) * zb));
}

DiskPoint mobius_inv(const DiskPoint& a) noexcept {
  return DiskPoint(-a.value());
}

std::complex<double> gyration_multiplier(const DiskPoint& a, const DiskPoint& b,
                                         double guard) {
  check_guard(a, guard);
  check_guard(b, guard);
  const std::complex<double> za = a.value();
  const std::complex<double> zb = b.value();
  return (1.0 + za * std::conj(zb)) / (1.0 + std::conj(za) * zb);
}

DiskPoint mobius_gyr(const DiskPoint& a, const DiskPoint& b, const DiskPoint& c,
                     double guard) {
  check_guard(c, guard);
  return DiskPoint(gyration_multiplier(a, b, guard) * c.value());
}

DiskPoint MobiusModel::sample_in_ball(std::mt19937_64& rng, double r) const {
  const double rho = r * std::sqrt(unit_real(rng));
  const double theta = uniform_angle(rng);
  return DiskPoint(rho * std::cos(theta), rho * std::sin(theta));
}

DiskPoint MobiusModel::sample_on_sphere(std::mt19937_64& rng, double r) const {
  const double theta = uniform_angle(rng);
  return DiskPoint(r * std::cos(theta), r * std::sin(theta));
}

}  // namespace gyro::mobius
