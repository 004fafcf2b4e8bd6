#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "symtensor/tensor.hpp"

namespace symtensor {

/// Counter-based standard normal generator.
///
/// The k-th 64-bit word of stream (seed, stream) is the SplitMix64 finalizer
/// applied to key(seed, stream) + (k + 1) * 0x9E3779B97F4A7C15, so any word
/// can be produced without generating its predecessors. Normals come in
/// Box-Muller pairs from two consecutive words.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t stream);

  [[nodiscard]] std::uint64_t next_bits();
  [[nodiscard]] double next();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Four i.i.d. N(0,1) class entries a_30, a_21, a_12, a_03 (in that order).
[[nodiscard]] SymmetricTensor sample_sym222(GaussianStream& rng);

enum class PencilReality { Real2, Complex3, Degenerate };

/// Reality of the roots of det(A0 - mu A1) for real slices: Real2 when the
/// discriminant exceeds 1e-12 * scale^2, Complex3 when below its negative.
[[nodiscard]] PencilReality classify_pencil(const Eigen::Matrix2d& a0, const Eigen::Matrix2d& a1);

/// Same rule for a real symmetric 2x2x2 tensor.
[[nodiscard]] PencilReality classify_pencil_reality(const SymmetricTensor& a);

enum class ExperimentCase { Sym222, Asym222 };

struct TrialStats {
  ExperimentCase experiment = ExperimentCase::Sym222;
  std::uint64_t samples = 0;
  std::uint64_t rank2_count = 0;
  std::uint64_t rank3_count = 0;
  std::uint64_t degenerate_count = 0;
  double fraction_rank2 = 0.0;  ///< rank2 / (samples - degenerate)
  double stderr_ = 0.0;         ///< sqrt(f (1 - f) / (samples - degenerate))
  std::uint64_t seed = 0;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

/// Trial i draws from GaussianStream(seed, i): 4 normals for Sym222 (class
/// entries), 8 for Asym222 (A0 then A1, row-major). Trials are sharded over
/// `workers` threads in contiguous blocks; counts are summed, so the result
/// does not depend on the worker count.
[[nodiscard]] TrialStats typical_rank_experiment(ExperimentCase experiment, std::uint64_t samples,
                                                 std::uint64_t seed, unsigned workers = 1);

[[nodiscard]] const char* case_name(ExperimentCase experiment);

/// "case,samples,seed,rank2,rank3,degenerate,fraction,stderr"
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const TrialStats& stats);

}  // namespace symtensor
