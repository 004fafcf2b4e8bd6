#include "symtensor/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>
#include <vector>

#include "symtensor/decompose.hpp"
#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Counts {
  std::uint64_t rank2 = 0, rank3 = 0, degenerate = 0;
};

PencilReality classify_quadratic(double q2, double q1, double q0) {
  const double scale = std::max({std::abs(q2), std::abs(q1), std::abs(q0)});
  if (scale == 0.0) return PencilReality::Degenerate;
  const double disc = q1 * q1 - 4.0 * q2 * q0;
  const double threshold = kPencilDegeneracyTol * scale * scale;
  if (disc > threshold) return PencilReality::Real2;
  if (disc < -threshold) return PencilReality::Complex3;
  return PencilReality::Degenerate;
}

PencilReality classify_sym(double a, double b, double c, double d) {
  return classify_quadratic(b * d - c * c, -(a * d - b * c), a * c - b * b);
}

Counts run_block(ExperimentCase experiment, std::uint64_t begin, std::uint64_t end, std::uint64_t seed) {
  Counts counts;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    GaussianStream rng(seed, trial);
    PencilReality r;
    if (experiment == ExperimentCase::Sym222) {
      const double a = rng.next(), b = rng.next(), c = rng.next(), d = rng.next();
      r = classify_sym(a, b, c, d);
    } else {
      Eigen::Matrix2d a0;
      Eigen::Matrix2d a1;
      a0(0, 0) = rng.next();
      a0(0, 1) = rng.next();
      a0(1, 0) = rng.next();
      a0(1, 1) = rng.next();
      a1(0, 0) = rng.next();
      a1(0, 1) = rng.next();
      a1(1, 0) = rng.next();
      a1(1, 1) = rng.next();
      r = classify_pencil(a0, a1);
    }
    switch (r) {
      case PencilReality::Real2: ++counts.rank2; break;
      case PencilReality::Complex3: ++counts.rank3; break;
      case PencilReality::Degenerate: ++counts.degenerate; break;
    }
  }
  return counts;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream + kGolden))) {}

std::uint64_t GaussianStream::next_bits() { return mix64(key_ + (++counter_) * kGolden); }

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double kUnit = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = static_cast<double>((next_bits() >> 11) + 1) * kUnit;  // (0, 1]
  const double u2 = static_cast<double>(next_bits() >> 11) * kUnit;        // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

SymmetricTensor sample_sym222(GaussianStream& rng) {
  SymmetricTensor::CoeffMap coeffs;
  for (const auto& p : enumerate_exponents(3, 2)) coeffs.emplace(p, Complex{rng.next(), 0.0});
  return {3, 2, std::move(coeffs)};
}

PencilReality classify_pencil(const Eigen::Matrix2d& a0, const Eigen::Matrix2d& a1) {
  return classify_quadratic(a1.determinant(),
                            -(a0(0, 0) * a1(1, 1) + a0(1, 1) * a1(0, 0) - a0(0, 1) * a1(1, 0) - a0(1, 0) * a1(0, 1)),
                            a0.determinant());
}

PencilReality classify_pencil_reality(const SymmetricTensor& a) {
  const auto [a0, a1] = pencil_slices(a);
  for (const auto& [p, v] : a.coeffs()) {
    if (v.imag() != 0.0) throw ValidationError("classify_pencil_reality: tensor must be real");
  }
  return classify_pencil(a0.real(), a1.real());
}

TrialStats typical_rank_experiment(ExperimentCase experiment, std::uint64_t samples, std::uint64_t seed,
                                   unsigned workers) {
  if (samples == 0) throw ValidationError("typical_rank_experiment: need at least one sample");
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::uint64_t>(samples, 256)));

  std::vector<Counts> partial(workers);
  std::vector<std::thread> threads;
  const std::uint64_t block = samples / workers;
  const std::uint64_t extra = samples % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + block + (w < extra ? 1 : 0);
    if (workers == 1) {
      partial[w] = run_block(experiment, begin, end, seed);
    } else {
      threads.emplace_back([&, w, begin, end] { partial[w] = run_block(experiment, begin, end, seed); });
    }
    begin = end;
  }
  for (auto& t : threads) t.join();

  TrialStats stats;
  stats.experiment = experiment;
  stats.samples = samples;
  stats.seed = seed;
  for (const auto& c : partial) {
    stats.rank2_count += c.rank2;
    stats.rank3_count += c.rank3;
    stats.degenerate_count += c.degenerate;
  }
  const std::uint64_t effective = samples - stats.degenerate_count;
  if (effective > 0) {
    const double f = static_cast<double>(stats.rank2_count) / static_cast<double>(effective);
    stats.fraction_rank2 = f;
    stats.stderr_ = std::sqrt(f * (1.0 - f) / static_cast<double>(effective));
  }
  return stats;
}

const char* case_name(ExperimentCase experiment) {
  return experiment == ExperimentCase::Sym222 ? "sym222" : "asym222";
}

std::string csv_header() { return "case,samples,seed,rank2,rank3,degenerate,fraction,stderr"; }

std::string csv_row(const TrialStats& s) {
  return std::string(case_name(s.experiment)) + "," + std::to_string(s.samples) + "," + std::to_string(s.seed) + "," +
         std::to_string(s.rank2_count) + "," + std::to_string(s.rank3_count) + "," +
         std::to_string(s.degenerate_count) + "," + format_double(s.fraction_rank2) + "," +
         format_double(s.stderr_);
}

}  // namespace symtensor
