#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/error.hpp"
#include "gyro/model.hpp"
#include "gyro/sampling.hpp"

// Numeric checks of neighbourhood-base conditions in the continuous models:
// gyration invariance of balls and the admissible chain containment
// U_{n+1} + (U_{n+1} + U_{n+1}) c U_n.
namespace gyro::topo {

/// Elements x, y used as gyration arguments are drawn from this fraction of
/// the model's ball.
inline constexpr double kArgumentRadius = 0.95;

struct InvarianceResult {
  double radius = 0.0;
  bool ok = true;
  double max_deviation = 0.0;  // max | |gyr[x,y](u)| - |u| |, and round-trip error
  std::uint64_t samples = 0;
};

/// Deviation for one (x, y, u): modulus change under gyr[x,y] and the error
/// of recovering u as the image of gyr[y,x](u).
template <GyroModel M>
double gyration_deviation(const M& m, const typename M::element_type& x,
                          const typename M::element_type& y, const typename M::element_type& u) {
  auto gyr = [&m](const auto& a, const auto& b, const auto& c) {
    if constexpr (ClosedFormGyration<M>)
      return m.closed_gyr(a, b, c);
    else
      return gyr_apply(m, a, b, c);
  };
  const auto image = gyr(x, y, u);
  const auto preimage = gyr(y, x, u);
  const double modulus = std::abs(m.norm(image) - m.norm(u));
  const double inverse_modulus = std::abs(m.norm(preimage) - m.norm(u));
  const double round_trip = m.distance(gyr(x, y, preimage), u);
  return std::max({modulus, inverse_modulus, round_trip});
}

/// Samples with moduli near r with probability 1/2, uniform in the ball
/// otherwise.
template <ContinuousGyroModel M>
typename M::element_type sample_boundary_biased(const M& m, std::mt19937_64& rng, double r) {
  if (unit_real(rng) < 0.5) return m.sample_on_sphere(rng, r * (1.0 - 0.05 * unit_real(rng)));
  return m.sample_in_ball(rng, r);
}

/// gyr[x,y](U_r) = U_r on sampled x, y and u with |u| <= r. Passing means
/// |gyr[x,y](u)| <= r + tol and every sampled u is the image of a point of
/// U_r, both within tol.
template <ContinuousGyroModel M>
InvarianceResult ball_gyr_invariance(const M& m, double r, std::uint64_t samples,
                                     std::uint64_t seed, double tol) {
  if (!(r > 0.0 && r < m.bound()))
    throw Error(ErrorKind::invalid_argument, "ball radius must lie in (0, bound)");
  if (samples == 0) throw Error(ErrorKind::invalid_argument, "sample count must be >= 1");
  InvarianceResult out;
  out.radius = r;
  out.samples = samples;
  const double arg_radius = kArgumentRadius * m.bound();
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    const auto x = m.sample_in_ball(rng, arg_radius);
    const auto y = m.sample_in_ball(rng, arg_radius);
    const auto u = sample_boundary_biased(m, rng, r);
    const double dev = gyration_deviation(m, x, y, u);
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  // |gyr(u)| <= |u| + deviation <= r + deviation.
  out.ok = out.max_deviation <= tol;
  return out;
}

struct BaseCheckResult {
  bool ok = true;
  double max_deviation = 0.0;
  std::vector<InvarianceResult> per_radius;
};

/// ball_gyr_invariance for every radius; an empty list passes vacuously.
template <ContinuousGyroModel M>
BaseCheckResult strongly_topological_base_check(const M& m, std::span<const double> radii,
                                                std::uint64_t samples, std::uint64_t seed,
                                                double tol) {
  BaseCheckResult out;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    InvarianceResult r = ball_gyr_invariance(m, radii[k], samples, seed + k, tol);
    out.ok = out.ok && r.ok;
    out.max_deviation = std::max(out.max_deviation, r.max_deviation);
    out.per_radius.push_back(r);
  }
  return out;
}

/// Strictly decreasing radii r_0 > r_1 > ... > r_k in (0, bound).
class RadiusChain {
 public:
  RadiusChain(std::vector<double> radii, double bound) : radii_(std::move(radii)) {
    if (radii_.size() < 2)
      throw Error(ErrorKind::invalid_argument, "a radius chain needs at least two radii");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      if (!(radii_[i] > 0.0 && radii_[i] < bound))
        throw Error(ErrorKind::invalid_argument,
                    "radius " + std::to_string(radii_[i]) + " is outside (0, bound)");
      if (i > 0 && !(radii_[i] < radii_[i - 1]))
        throw Error(ErrorKind::invalid_argument, "radii must be strictly decreasing");
    }
  }

  const std::vector<double>& radii() const noexcept { return radii_; }
  std::size_t steps() const noexcept { return radii_.size() - 1; }

 private:
  std::vector<double> radii_;
};

enum class Verdict { pass, fail, inconclusive };

inline std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct ChainStep {
  std::size_t index = 0;       // n: checks U_{n+1} + (U_{n+1} + U_{n+1}) c U_n
  double outer_radius = 0.0;   // r_n
  double inner_radius = 0.0;   // r_{n+1}
  double worst_modulus = 0.0;  // largest |a + (b + c)| seen
  double collinear_modulus = 0.0;
  Verdict verdict = Verdict::pass;
  std::vector<std::vector<double>> worst_triple;  // witness when verdict is fail
};

struct ChainReport {
  std::vector<ChainStep> steps;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  /// fail if any step fails, else inconclusive if any is, else pass.
  Verdict overall() const noexcept {
    Verdict v = Verdict::pass;
    for (const ChainStep& s : steps) {
      if (s.verdict == Verdict::fail) return Verdict::fail;
      if (s.verdict == Verdict::inconclusive) v = Verdict::inconclusive;
    }
    return v;
  }
};

/// Estimates sup |a + (b + c)| over |a|, |b|, |c| <= r_{n+1} for each step
/// from boundary-biased samples plus the collinear configuration a = b = c
/// on a fixed axis, then compares with r_n using a two-sided margin: pass if
/// the estimate is <= r_n - tol, fail if it exceeds r_n + tol, otherwise
/// inconclusive.
template <ContinuousGyroModel M>
ChainReport admissible_chain_check(const M& m, const RadiusChain& chain, std::uint64_t samples,
                                   std::uint64_t seed, double tol) {
  if (samples == 0) throw Error(ErrorKind::invalid_argument, "sample count must be >= 1");
  ChainReport report;
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tol;
  const auto& radii = chain.radii();
  for (std::size_t n = 0; n < chain.steps(); ++n) {
    ChainStep step;
    step.index = n;
    step.outer_radius = radii[n];
    step.inner_radius = radii[n + 1];
    const double r = step.inner_radius;

    const auto axis = m.on_axis(r);
    step.collinear_modulus = m.norm(m.op(axis, m.op(axis, axis)));
    step.worst_modulus = step.collinear_modulus;
    step.worst_triple = {m.coords(axis), m.coords(axis), m.coords(axis)};

    for (std::uint64_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, (static_cast<std::uint64_t>(n) << 40) | i);
      const auto a = sample_boundary_biased(m, rng, r);
      const auto b = sample_boundary_biased(m, rng, r);
      const auto c = sample_boundary_biased(m, rng, r);
      const double modulus = m.norm(m.op(a, m.op(b, c)));
      if (modulus > step.worst_modulus) {
        step.worst_modulus = modulus;
        step.worst_triple = {m.coords(a), m.coords(b), m.coords(c)};
      }
    }

    if (step.worst_modulus <= step.outer_radius - tol)
      step.verdict = Verdict::pass;
    else if (step.worst_modulus > step.outer_radius + tol)
      step.verdict = Verdict::fail;
    else
      step.verdict = Verdict::inconclusive;
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace gyro::topo
