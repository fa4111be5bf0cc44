#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "gyro/axiom_report.hpp"
#include "gyro/error.hpp"
#include "gyro/model.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

struct SampledCheckOptions {
  std::uint64_t count = 100000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

inline constexpr std::array<Axiom, 10> kAlgebraicChecks = {
    Axiom::g1,     Axiom::g2,     Axiom::g3_equation, Axiom::g3_automorphism,
    Axiom::g4,     Axiom::lemma1, Axiom::lemma2,      Axiom::lemma3,
    Axiom::lemma4, Axiom::lemma5,
};

namespace detail {

inline constexpr std::size_t slot(Axiom a) {
  return static_cast<std::size_t>(a) - static_cast<std::size_t>(Axiom::g1);
}

template <class E>
struct Worst {
  double residual = -1.0;
  std::uint64_t index = 0;
  std::vector<E> sample;

  void offer(double r, std::uint64_t i, std::vector<E> s) {
    if (r > residual) {
      residual = r;
      index = i;
      sample = std::move(s);
    }
  }
};

template <class E>
using WorstTable = std::array<Worst<E>, kAlgebraicChecks.size()>;

// Evaluation errors (an intermediate leaving the model's domain) count as an
// infinite residual for the check that raised them.
template <class Fn>
double guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

template <GyroModel M>
void evaluate_sample(const M& m, const typename M::element_type& x,
                     const typename M::element_type& y,
                     const typename M::element_type& z,
                     const typename M::element_type& w, std::uint64_t index,
                     WorstTable<typename M::element_type>& worst) {
  using E = typename M::element_type;
  const E e = m.identity();
  auto gyr = [&m](const E& a, const E& b, const E& c) { return gyr_apply(m, a, b, c); };

  worst[slot(Axiom::g1)].offer(guarded([&] {
    return std::max(m.distance(m.op(e, x), x), m.distance(m.op(x, e), x));
  }), index, {x});
  worst[slot(Axiom::g2)].offer(guarded([&] {
    const E ix = m.inv(x);
    return std::max(m.distance(m.op(ix, x), e), m.distance(m.op(x, ix), e));
  }), index, {x});
  worst[slot(Axiom::g3_equation)].offer(guarded([&] {
    return m.distance(m.op(x, m.op(y, z)), m.op(m.op(x, y), gyr(x, y, z)));
  }), index, {x, y, z});
  worst[slot(Axiom::g3_automorphism)].offer(guarded([&] {
    return m.distance(gyr(x, y, m.op(z, w)), m.op(gyr(x, y, z), gyr(x, y, w)));
  }), index, {x, y, z, w});
  worst[slot(Axiom::g4)].offer(guarded([&] {
    return m.distance(gyr(m.op(x, y), y, z), gyr(x, y, z));
  }), index, {x, y, z});
  worst[slot(Axiom::lemma1)].offer(guarded([&] {
    return m.distance(m.op(m.inv(x), m.op(x, y)), y);
  }), index, {x, y});
  worst[slot(Axiom::lemma2)].offer(guarded([&] {
    const E iy = m.inv(y);
    return m.distance(m.op(m.op(x, iy), gyr(x, iy, y)), x);
  }), index, {x, y});
  worst[slot(Axiom::lemma3)].offer(guarded([&] {
    return m.distance(m.op(m.op(x, gyr(x, y, m.inv(y))), y), x);
  }), index, {x, y});
  if constexpr (ClosedFormGyration<M>) {
    worst[slot(Axiom::lemma4)].offer(guarded([&] {
      return m.distance(gyr(x, y, z), m.closed_gyr(x, y, z));
    }), index, {x, y, z});
  }
  worst[slot(Axiom::lemma5)].offer(guarded([&] {
    return m.distance(m.op(m.op(x, y), z), m.op(x, m.op(y, gyr(y, x, z))));
  }), index, {x, y, z});
}

}  // namespace detail

/// Sampled check of G1-G4 and the gyrogroup lemmas. `sampler(rng)` draws
/// one element; each sample index draws four elements (x, y, z1, z2) from
/// its own stream, so the report is identical for every `jobs` value.
template <GyroModel M, class Sampler>
  requires std::invocable<Sampler&, std::mt19937_64&>
AxiomReport check_axioms(const M& model, Sampler sampler, const SampledCheckOptions& opt) {
  using E = typename M::element_type;
  if (opt.count == 0) throw Error(ErrorKind::invalid_argument, "sample count must be >= 1");
  if (!(opt.tol >= 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be >= 0");

  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(opt.jobs == 0 ? 1 : opt.jobs, 1, opt.count));
  std::vector<detail::WorstTable<E>> partial(jobs);

  auto run_chunk = [&](unsigned chunk) {
    const std::uint64_t begin = opt.count * chunk / jobs;
    const std::uint64_t end = opt.count * (chunk + 1) / jobs;
    Sampler local = sampler;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto rng = sample_rng(opt.seed, i);
      const E x = local(rng);
      const E y = local(rng);
      const E z = local(rng);
      const E w = local(rng);
      detail::evaluate_sample(model, x, y, z, w, i, partial[chunk]);
    }
  };

  if (jobs == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned c = 0; c < jobs; ++c) workers.emplace_back(run_chunk, c);
  }

  // Chunks cover increasing index ranges; strict '>' keeps the earliest
  // maximiser, exactly as a sequential pass would.
  detail::WorstTable<E> merged;
  for (auto& table : partial) {
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (table[k].residual > merged[k].residual) merged[k] = std::move(table[k]);
    }
  }

  AxiomReport report;
  report.exhaustive = false;
  report.sample_count = opt.count;
  report.seed = opt.seed;
  report.tolerance = opt.tol;
  for (Axiom a : kAlgebraicChecks) {
    CheckResult c;
    c.axiom = a;
    const auto& w = merged[detail::slot(a)];
    if (a == Axiom::lemma4 && !ClosedFormGyration<M>) {
      c.status = Status::skipped;
      c.note = "model has no closed-form gyration; gyr is defined by this identity";
      report.checks.push_back(std::move(c));
      continue;
    }
    c.max_residual = w.residual;
    for (const E& el : w.sample) c.worst_sample.push_back(model.coords(el));
    c.status = w.residual <= opt.tol ? Status::pass : Status::fail;
    report.checks.push_back(std::move(c));
  }
  return report;
}

/// Exhaustive, exact check over every tuple of a finite model. Each failing
/// check carries the first failing tuple in lexicographic order.
template <IndexedGyroModel M>
AxiomReport check_axioms_exhaustive(const M& m) {
  const int n = m.order();
  const int e = m.identity();
  auto op = [&m](int a, int b) { return m.op(a, b); };
  auto gyr = [&m](int a, int b, int c) { return gyr_apply(m, a, b, c); };

  AxiomReport report;
  report.exhaustive = true;
  report.sample_count = static_cast<std::uint64_t>(n);
  report.tolerance = 0.0;

  auto record = [&report](Axiom a, std::vector<int> witness) {
    CheckResult c;
    c.axiom = a;
    if (!witness.empty()) {
      c.status = Status::fail;
      c.max_residual = 1.0;
      c.witness = std::move(witness);
    }
    report.checks.push_back(std::move(c));
  };

  std::vector<int> w;
  for (int a = 0; a < n && w.empty(); ++a)
    if (op(e, a) != a || op(a, e) != a) w = {a};
  record(Axiom::g1, std::move(w));

  w.clear();
  for (int a = 0; a < n && w.empty(); ++a)
    if (op(m.inv(a), a) != e || op(a, m.inv(a)) != e) w = {a};
  record(Axiom::g2, std::move(w));

  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      for (int z = 0; z < n && w.empty(); ++z)
        if (op(x, op(y, z)) != op(op(x, y), gyr(x, y, z))) w = {x, y, z};
  record(Axiom::g3_equation, std::move(w));

  // gyr[x,y] is tabulated once per pair; the homomorphism scan is O(n^4).
  w.clear();
  std::vector<int> image(n);
  std::vector<int> first_preimage(n);
  for (int x = 0; x < n && w.empty(); ++x) {
    for (int y = 0; y < n && w.empty(); ++y) {
      std::fill(first_preimage.begin(), first_preimage.end(), -1);
      for (int z = 0; z < n; ++z) image[z] = gyr(x, y, z);
      for (int z = 0; z < n && w.empty(); ++z) {
        int& seen = first_preimage[image[z]];
        if (seen >= 0) w = {x, y, seen, z};  // not injective
        seen = z;
      }
      for (int z1 = 0; z1 < n && w.empty(); ++z1)
        for (int z2 = 0; z2 < n && w.empty(); ++z2)
          if (image[op(z1, z2)] != op(image[z1], image[z2])) w = {x, y, z1, z2};
    }
  }
  record(Axiom::g3_automorphism, std::move(w));

  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      for (int z = 0; z < n && w.empty(); ++z)
        if (gyr(op(x, y), y, z) != gyr(x, y, z)) w = {x, y, z};
  record(Axiom::g4, std::move(w));

  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      if (op(m.inv(x), op(x, y)) != y) w = {x, y};
  record(Axiom::lemma1, std::move(w));

  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      if (op(op(x, m.inv(y)), gyr(x, m.inv(y), y)) != x) w = {x, y};
  record(Axiom::lemma2, std::move(w));

  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      if (op(op(x, gyr(x, y, m.inv(y))), y) != x) w = {x, y};
  record(Axiom::lemma3, std::move(w));

  if constexpr (ClosedFormGyration<M>) {
    w.clear();
    for (int x = 0; x < n && w.empty(); ++x)
      for (int y = 0; y < n && w.empty(); ++y)
        for (int z = 0; z < n && w.empty(); ++z)
          if (gyr(x, y, z) != m.closed_gyr(x, y, z)) w = {x, y, z};
    record(Axiom::lemma4, std::move(w));
  } else {
    CheckResult c;
    c.axiom = Axiom::lemma4;
    c.status = Status::skipped;
    c.note = "gyr is defined by this identity";
    report.checks.push_back(std::move(c));
  }

  w.clear();
  for (int x = 0; x < n && w.empty(); ++x)
    for (int y = 0; y < n && w.empty(); ++y)
      for (int z = 0; z < n && w.empty(); ++z)
        if (op(op(x, y), z) != op(x, op(y, gyr(y, x, z)))) w = {x, y, z};
  record(Axiom::lemma5, std::move(w));

  return report;
}

}  // namespace gyro
