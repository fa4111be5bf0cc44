#pragma once

#include <random>
#include <vector>

namespace gyro::einstein {

/// A 3-velocity. Membership in the c-ball is a property of the model, so
/// this is a plain vector.
struct Velocity3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Velocity3&, const Velocity3&) = default;
};

inline Velocity3 operator+(const Velocity3& a, const Velocity3& b) noexcept {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Velocity3 operator-(const Velocity3& a, const Velocity3& b) noexcept {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Velocity3 operator-(const Velocity3& a) noexcept { return {-a.x, -a.y, -a.z}; }
inline Velocity3 operator*(double s, const Velocity3& a) noexcept {
  return {s * a.x, s * a.y, s * a.z};
}
inline double dot(const Velocity3& a, const Velocity3& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
double norm(const Velocity3& a) noexcept;

/// Lorentz factor 1 / sqrt(1 - |u|^2 / c^2). Throws invalid-element when
/// |u| >= c.
double gamma(const Velocity3& u, double c = 1.0);

/// Relativistic velocity composition in the open c-ball.
Velocity3 einstein_add(const Velocity3& u, const Velocity3& v, double c = 1.0);

Velocity3 einstein_inv(const Velocity3& u) noexcept;

/// gyr[u,v](w) evaluated as -(u+v) + (u + (v + w)).
Velocity3 einstein_gyr(const Velocity3& u, const Velocity3& v, const Velocity3& w,
                       double c = 1.0);

class EinsteinModel {
 public:
  using element_type = Velocity3;

  explicit EinsteinModel(double c = 1.0);

  double c() const noexcept { return c_; }

  Velocity3 identity() const noexcept { return {}; }
  Velocity3 op(const Velocity3& u, const Velocity3& v) const { return einstein_add(u, v, c_); }
  Velocity3 inv(const Velocity3& u) const noexcept { return einstein_inv(u); }
  double distance(const Velocity3& u, const Velocity3& v) const noexcept {
    return einstein::norm(u - v);
  }
  std::vector<double> coords(const Velocity3& u) const { return {u.x, u.y, u.z}; }

  double bound() const noexcept { return c_; }
  double norm(const Velocity3& u) const noexcept { return einstein::norm(u); }
  /// Uniform by volume in { |u| <= r }.
  Velocity3 sample_in_ball(std::mt19937_64& rng, double r) const;
  /// Uniform direction, norm exactly r.
  Velocity3 sample_on_sphere(std::mt19937_64& rng, double r) const;
  Velocity3 on_axis(double r) const { return {r, 0.0, 0.0}; }

 private:
  double c_;
};

}  // namespace gyro::einstein
