#include <doctest.h>

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <string>

#include "symtensor/errors.hpp"
#include "symtensor/montecarlo.hpp"

using namespace symtensor;

namespace {

nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(std::string(SYMTENSOR_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("generator words match the golden stream") {
  const auto golden = load_golden("rng_seed42.json");
  GaussianStream rng(42, 0);
  for (const auto& w : golden["stream0_words"]) {
    CHECK(rng.next_bits() == std::stoull(w.get<std::string>()));
  }
}

TEST_CASE("sym222 samples match the golden values") {
  const auto golden = load_golden("rng_seed42.json");
  std::uint64_t i = 0;
  for (const auto& expected : golden["sym222_samples"]) {
    GaussianStream rng(42, i++);
    const auto c = sample_sym222(rng).coefficient_vector();
    REQUIRE(c.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(c[j].real() - expected[j].get<double>()) < 1e-13);
      CHECK(c[j].imag() == 0.0);
    }
  }
}

TEST_CASE("streams are reproducible and distinct") {
  GaussianStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  const auto wa = a.next_bits();
  CHECK(wa == b.next_bits());
  CHECK(wa != c.next_bits());
  CHECK(wa != d.next_bits());
}

TEST_CASE("normal draws have unit moments") {
  GaussianStream rng(1, 0);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.next();
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("pencil reality classification") {
  Eigen::Matrix2d a0, a1;
  // 3xy^2 - x^3: complex roots
  a0 << -1, 0, 0, 1;
  a1 << 0, 1, 1, 0;
  CHECK(classify_pencil(a0, a1) == PencilReality::Complex3);
  // x^3 + y^3: one finite and one infinite real root
  a0 << 1, 0, 0, 0;
  a1 << 0, 0, 0, 1;
  CHECK(classify_pencil(a0, a1) == PencilReality::Real2);
  a0.setZero();
  a1.setZero();
  CHECK(classify_pencil(a0, a1) == PencilReality::Degenerate);

  const SymmetricTensor double_root(3, 2, {{ExponentVector({2, 1}), 1.0}});
  CHECK(classify_pencil_reality(double_root) == PencilReality::Degenerate);
  const SymmetricTensor complex_entry(3, 2, {{ExponentVector({2, 1}), Complex(0.0, 1.0)}});
  CHECK_THROWS_AS((void)classify_pencil_reality(complex_entry), ValidationError);
}

TEST_CASE("results do not depend on the worker count") {
  for (auto c : {ExperimentCase::Sym222, ExperimentCase::Asym222}) {
    const auto one = typical_rank_experiment(c, 20000, 42, 1);
    CHECK(one == typical_rank_experiment(c, 20000, 42, 3));
    CHECK(one == typical_rank_experiment(c, 20000, 42, 8));
    CHECK(one.rank2_count + one.rank3_count + one.degenerate_count == 20000);
    CHECK_FALSE(one == typical_rank_experiment(c, 20000, 43, 1));
  }
}

TEST_CASE("fractions are near their expected values at moderate sample sizes") {
  const auto sym = typical_rank_experiment(ExperimentCase::Sym222, 100000, 42, 2);
  CHECK(std::abs(sym.fraction_rank2 - 0.52) < 5 * sym.stderr_ + 0.01);
  const auto asym = typical_rank_experiment(ExperimentCase::Asym222, 100000, 42, 2);
  CHECK(std::abs(asym.fraction_rank2 - 0.785) < 5 * asym.stderr_ + 0.01);
  CHECK(sym.stderr_ > 0.0);
  CHECK(sym.stderr_ < 0.002);
}

TEST_CASE("csv formatting") {
  CHECK(csv_header() == "case,samples,seed,rank2,rank3,degenerate,fraction,stderr");
  TrialStats s;
  s.experiment = ExperimentCase::Asym222;
  s.samples = 10;
  s.seed = 5;
  s.rank2_count = 7;
  s.rank3_count = 3;
  s.fraction_rank2 = 0.7;
  s.stderr_ = std::sqrt(0.21 / 10);
  CHECK(csv_row(s) == "asym222,10,5,7,3,0,0.700000,0.144914");
  CHECK_THROWS_AS((void)typical_rank_experiment(ExperimentCase::Sym222, 0, 1), ValidationError);
}
