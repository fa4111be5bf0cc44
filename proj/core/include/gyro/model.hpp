#pragma once

#include <concepts>
#include <random>
#include <vector>

namespace gyro {

/// A gyrogroup presentation: identity, binary operation, inverse and a
/// distance used for tolerant comparison (exact models return 0 or 1).
template <class M>
concept GyroModel = requires(const M& m, const typename M::element_type& a,
                             const typename M::element_type& b) {
  typename M::element_type;
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.op(a, b) } -> std::convertible_to<typename M::element_type>;
  { m.inv(a) } -> std::convertible_to<typename M::element_type>;
  { m.distance(a, b) } -> std::convertible_to<double>;
  { m.coords(a) } -> std::convertible_to<std::vector<double>>;
};

/// Models that also know their gyration in closed form.
template <class M>
concept ClosedFormGyration =
    GyroModel<M> && requires(const M& m, const typename M::element_type& a) {
      { m.closed_gyr(a, a, a) } -> std::convertible_to<typename M::element_type>;
    };

/// Finite models whose elements are the integers 0..order()-1.
template <class M>
concept IndexedGyroModel =
    GyroModel<M> && std::same_as<typename M::element_type, int> &&
    requires(const M& m) {
      { m.order() } -> std::convertible_to<int>;
    };

/// Models living in an open ball of radius bound(); used by the sampled
/// axiom checks and the neighbourhood-base checks.
template <class M>
concept ContinuousGyroModel =
    GyroModel<M> &&
    requires(const M& m, const typename M::element_type& a, std::mt19937_64& rng,
             double r) {
      { m.bound() } -> std::convertible_to<double>;
      { m.norm(a) } -> std::convertible_to<double>;
      { m.sample_in_ball(rng, r) } -> std::convertible_to<typename M::element_type>;
      { m.sample_on_sphere(rng, r) } -> std::convertible_to<typename M::element_type>;
      { m.on_axis(r) } -> std::convertible_to<typename M::element_type>;
    };

/// gyr[a,b](z) = (-(a+b)) + (a + (b + z)).
template <GyroModel M>
typename M::element_type gyr_apply(const M& model,
                                   const typename M::element_type& a,
                                   const typename M::element_type& b,
                                   const typename M::element_type& z) {
  return model.op(model.inv(model.op(a, b)), model.op(a, model.op(b, z)));
}

template <GyroModel M>
bool equal_within(const M& model, const typename M::element_type& a,
                  const typename M::element_type& b, double tol) {
  return model.distance(a, b) <= tol;
}

}  // namespace gyro
