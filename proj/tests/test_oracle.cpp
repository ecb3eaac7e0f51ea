#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "unipat/error.hpp"
#include "unipat/oracle.hpp"
#include "unipat/serialize.hpp"

using namespace unipat;
using namespace unipat::testing;

namespace {

ComplexMatrix diag(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("nearest_unitary") {
  CHECK((nearest_unitary(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)).norm() < 1e-14);
  CHECK((nearest_unitary(2.0 * fourier_matrix(2)) - fourier_matrix(2)).norm() < 1e-14);
  CHECK((nearest_unitary(diag(2.0, 0.5)) - ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
  CHECK_THROWS_AS(nearest_unitary(diag(1.0, 0.0)), PreconditionError);

  // The polar factor is unitary and no farther from M than a random unitary.
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix m(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = Complex(g(rng), g(rng));
    const ComplexMatrix u = nearest_unitary(m);
    CHECK(unitarity_residual(u) < 1e-12);
    CHECK((m - u).norm() <= (m - random_unitary(4, trial)).norm() + 1e-12);
  }
}

TEST_CASE("pattern_projection") {
  CHECK((pattern_projection(fourier_matrix(2), all_ones(2), 1e-3) - fourier_matrix(2)).norm() == 0.0);

  const ComplexMatrix p = pattern_projection(ComplexMatrix::Identity(2, 2), Pattern::from_rows({"01", "10"}), 1e-3);
  CHECK(p(0, 0) == Complex(0.0));
  CHECK(p(1, 1) == Complex(0.0));
  CHECK(std::abs(p(0, 1)) == doctest::Approx(1e-3));
  CHECK(std::abs(p(1, 0)) == doctest::Approx(1e-3));

  // Entries above the floor keep their phase; small ones are lifted to it.
  ComplexMatrix m(2, 2);
  m << Complex(0.0, 0.5), Complex(1e-5, 0.0), Complex(0.3, 0.4), Complex(0.1, 0.0);
  const ComplexMatrix q = pattern_projection(m, Pattern::from_rows({"11", "10"}), 1e-3);
  CHECK(q(0, 0) == m(0, 0));
  CHECK(q(0, 1) == Complex(1e-3, 0.0));
  CHECK(q(1, 1) == Complex(0.0));
}

TEST_CASE("random_unitary is seeded") {
  const ComplexMatrix a = random_unitary(5, 42);
  CHECK(unitarity_residual(a) < 1e-12);
  CHECK(a == random_unitary(5, 42));
  CHECK(a != random_unitary(5, 43));
  CHECK(restart_seed(0, 0) != restart_seed(0, 1));
}

TEST_CASE("OracleParams::validate") {
  OracleParams p;
  CHECK_NOTHROW(p.validate());
  p.restarts = 0;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p = {};
  p.support_floor = 0.0;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
}

TEST_CASE("decide examples") {
  const Verdict tri = decide(triangle());
  REQUIRE(std::holds_alternative<Infeasible>(tri));
  CHECK(std::get<Infeasible>(tri).witness.members.size() == 2);

  const Verdict full = decide(all_ones(4));
  REQUIRE(std::holds_alternative<Feasible>(full));
  CHECK(std::get<Feasible>(full).certificate.valid());

  const Verdict c4 = decide(c4_pattern());
  REQUIRE(std::holds_alternative<Feasible>(c4));
  CHECK(support_of(std::get<Feasible>(c4).certificate.matrix, 1e-8) == c4_pattern());

  const Pattern x = Pattern::from_rows({"111", "111", "001"});
  const Verdict vx = decide(x);
  REQUIRE(std::holds_alternative<Infeasible>(vx));
  CHECK(std::get<Infeasible>(vx).witness == SqWitness{Side::rows, {0, 2}, {2}});
  // The larger column witness is also a genuine violation, just not minimal.
  CHECK(validate_witness(x, SqWitness{Side::columns, {0, 1, 2}, {0, 1}}));

  CHECK_THROWS_AS(decide(Pattern::from_rows({"10", "10"})), PreconditionError);
}

TEST_CASE("feasible certificates re-verify independently") {
  // Patterns that pass the SQ filter; every Feasible answer is checked from scratch.
  std::mt19937_64 rng(8);
  std::size_t feasible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Pattern p = random_pattern(3 + trial % 3, 0.7, rng);
    if (!well_formed(p)) continue;
    OracleParams params;
    params.seed = static_cast<std::uint64_t>(trial);
    params.restarts = 8;
    params.max_iters = 500;
    const Verdict v = decide(p, params);
    if (const auto* f = std::get_if<Feasible>(&v)) {
      ++feasible;
      const ComplexMatrix& u = f->certificate.matrix;
      CHECK((u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= 1e-10);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
          CHECK((std::abs(u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > 1e-8) == p.at(i, j));
    } else if (const auto* inf = std::get_if<Infeasible>(&v)) {
      CHECK(witness_holds(p, inf->witness.side, inf->witness.members, inf->witness.shared));
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("serial and parallel decide agree byte for byte") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const Pattern p = random_pattern(4, 0.75, rng);
    if (!well_formed(p)) continue;
    OracleParams params;
    params.seed = 99;
    params.restarts = 6;
    params.max_iters = 300;
    const std::string a = to_json(decide(p, params, Exec::serial)).dump();
    const std::string b = to_json(decide(p, params, Exec::parallel)).dump();
    CHECK(a == b);
    CHECK(a == to_json(decide(p, params, Exec::parallel)).dump());
  }
}

TEST_CASE("Unknown reports the best attempt") {
  // One iteration from a random start cannot land on a sparse unitary pattern.
  OracleParams params;
  params.restarts = 1;
  params.max_iters = 1;
  const Pattern p = Pattern::from_rows({"1101", "1110", "0111", "1011"});
  REQUIRE(is_strongly_quadrangular(p));
  const Verdict v = decide(p, params);
  REQUIRE(std::holds_alternative<Unknown>(v));
  CHECK(std::get<Unknown>(v).best_residual > 0.0);
  CHECK(verdict_kind(v) == "unknown");
}
