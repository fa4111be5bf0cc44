#pragma once

#include <complex>
#include <random>
#include <vector>

namespace gyro::mobius {

/// Inputs closer than this to the unit circle are rejected by default.
inline constexpr double kDefaultGuard = 1e-6;

/// A point of the open unit disk.
class DiskPoint {
 public:
  constexpr DiskPoint() = default;
  /// Throws invalid-element unless |re + i im| < 1.
  DiskPoint(double re, double im = 0.0);
  explicit DiskPoint(std::complex<double> z) : DiskPoint(z.real(), z.imag()) {}

  std::complex<double> value() const noexcept { return z_; }
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  double modulus() const noexcept { return std::abs(z_); }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  std::complex<double> z_{};
};

/// The closed ball U_r = { x : |x| <= r }, 0 < r < 1.
class Ball {
 public:
  explicit Ball(double radius);
  double radius() const noexcept { return radius_; }
  bool contains(const DiskPoint& p) const noexcept { return p.modulus() <= radius_; }

 private:
  double radius_;
};

/// (a + b) / (1 + conj(a) b). Throws invalid-element when an input lies
/// within `guard` of the unit circle.
DiskPoint mobius_add(const DiskPoint& a, const DiskPoint& b, double guard = kDefaultGuard);

DiskPoint mobius_inv(const DiskPoint& a) noexcept;

/// (1 + a conj(b)) / (1 + conj(a) b); a unit complex number.
std::complex<double> gyration_multiplier(const DiskPoint& a, const DiskPoint& b,
                                         double guard = kDefaultGuard);

/// gyr[a,b](c) in closed form: gyration_multiplier(a, b) * c.
DiskPoint mobius_gyr(const DiskPoint& a, const DiskPoint& b, const DiskPoint& c,
                     double guard = kDefaultGuard);

/// The Möbius gyrogroup as a GyroModel. `guard` applies to every
/// operation; a guard of 0 only enforces the open disk.
struct MobiusModel {
  using element_type = DiskPoint;

  double guard = kDefaultGuard;

  DiskPoint identity() const noexcept { return {}; }
  DiskPoint op(const DiskPoint& a, const DiskPoint& b) const { return mobius_add(a, b, guard); }
  DiskPoint inv(const DiskPoint& a) const noexcept { return mobius_inv(a); }
  double distance(const DiskPoint& a, const DiskPoint& b) const noexcept {
    return std::abs(a.value() - b.value());
  }
  std::vector<double> coords(const DiskPoint& a) const { return {a.re(), a.im()}; }
  DiskPoint closed_gyr(const DiskPoint& a, const DiskPoint& b, const DiskPoint& c) const {
    return mobius_gyr(a, b, c, guard);
  }

  double bound() const noexcept { return 1.0; }
  double norm(const DiskPoint& a) const noexcept { return a.modulus(); }
  /// Uniform by area in { |z| <= r }.
  DiskPoint sample_in_ball(std::mt19937_64& rng, double r) const;
  /// Uniform angle, modulus exactly r.
  DiskPoint sample_on_sphere(std::mt19937_64& rng, double r) const;
  DiskPoint on_axis(double r) const { return DiskPoint(r, 0.0); }
};

}  // namespace gyro::mobius
