#include "gyro/einstein.hpp"

#include <cmath>
#include <sstream>

#include "gyro/error.hpp"
#include "gyro/sampling.hpp"

namespace gyro::einstein {

namespace {

void check_in_ball(const Velocity3& u, double c) {
  const double n = norm(u);
  if (!std::isfinite(n) || !(n < c)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "velocity (" << u.x << ", " << u.y << ", " << u.z << ") has norm " << n
        << " >= c = " << c;
    throw Error(ErrorKind::invalid_element, msg.str());
  }
}

Velocity3 direction(std::mt19937_64& rng) {
  const double z = 2.0 * unit_real(rng) - 1.0;
  const double phi = uniform_angle(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

double norm(const Velocity3& a) noexcept { return std::hypot(a.x, a.y, a.z); }

double gamma(const Velocity3& u, double c) {
  check_in_ball(u, c);
  const double beta = norm(u) / c;
  // 1 - beta^2 factored to keep precision near the boundary.
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

Velocity3 einstein_add(const Velocity3& u, const Velocity3& v, double c) {
  check_in_ball(v, c);
  const double gu = gamma(u, c);
  const double c2 = c * c;
  const double uv = dot(u, v);
  const Velocity3 sum = u + (1.0 / gu) * v + (gu / (1.0 + gu) * uv / c2) * u;
  const Velocity3 result = (1.0 / (1.0 + uv / c2)) * sum;
  check_in_ball(result, c);
  return result;
}

Velocity3 einstein_inv(const Velocity3& u) noexcept { return -u; }

Velocity3 einstein_gyr(const Velocity3& u, const Velocity3& v, const Velocity3& w, double c) {
  return einstein_add(einstein_inv(einstein_add(u, v, c)),
                      einstein_add(u, einstein_add(v, w, c), c), c);
}

EinsteinModel::EinsteinModel(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw Error(ErrorKind::invalid_argument, "speed bound c must be positive and finite");
}

Velocity3 EinsteinModel::sample_in_ball(std::mt19937_64& rng, double r) const {
  const double rho = r * std::cbrt(unit_real(rng));
  return rho * direction(rng);
}

Velocity3 EinsteinModel::sample_on_sphere(std::mt19937_64& rng, double r) const {
  return r * direction(rng);
}

}  // namespace gyro::einstein
