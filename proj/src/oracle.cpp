#include "unipat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "unipat/error.hpp"

namespace unipat {

namespace {

constexpr double kRankFloor = 1e-14;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

struct RestartOutcome {
  std::optional<UnitaryCertificate> certificate;
  std::size_t iterations = 0;
  double best_residual = std::numeric_limits<double>::infinity();
  double best_min_on_support = 0.0;
};

// One alternating-projection run from a seeded Haar start.
RestartOutcome run_restart(const Pattern& p, const OracleParams& params, std::size_t restart) {
  const std::uint64_t stream = restart_seed(params.seed, restart);
  const Tolerances tol{params.unitary_tol, params.zero_tol};
  std::mt19937_64 jitter_rng(splitmix64(stream));
  std::normal_distribution<double> jitter(0.0, 1e-6);

  RestartOutcome out;
  ComplexMatrix x = random_unitary(p.size(), stream);
  for (std::size_t it = 0; it < params.max_iters; ++it) {
    out.iterations = it + 1;
    ComplexMatrix y = pattern_projection(x, p, params.support_floor, stream);

    UnitaryCertificate on_pattern = verify(y, p, tol);
    if (on_pattern.unitarity_residual < out.best_residual) {
      out.best_residual = on_pattern.unitarity_residual;
      out.best_min_on_support = on_pattern.min_on_support;
    }
    if (on_pattern.valid()) {
      out.certificate = std::move(on_pattern);
      return out;
    }

    try {
      x = nearest_unitary(y);
    } catch (const PreconditionError&) {
      // Rank-deficient iterate: nudge the on-pattern entries and retry once.
      for (Eigen::Index i = 0; i < y.rows(); ++i) {
        for (Eigen::Index j = 0; j < y.cols(); ++j) {
          if (p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
            y(i, j) += Complex(jitter(jitter_rng), jitter(jitter_rng));
          }
        }
      }
      try {
        x = nearest_unitary(y);
      } catch (const PreconditionError&) {
        return out;
      }
    }

    UnitaryCertificate near_pattern = verify(x, p, tol);
    if (near_pattern.valid()) {
      out.certificate = std::move(near_pattern);
      return out;
    }
  }
  return out;
}

Verdict assemble(std::vector<RestartOutcome>& outcomes, std::size_t upto) {
  Unknown unknown{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t r = 0; r < upto; ++r) {
    if (outcomes[r].certificate) {
      return Feasible{std::move(*outcomes[r].certificate), r, outcomes[r].iterations};
    }
    if (outcomes[r].best_residual < unknown.best_residual) {
      unknown.best_residual = outcomes[r].best_residual;
      unknown.best_min_on_support = outcomes[r].best_min_on_support;
    }
  }
  return unknown;
}

}  // namespace

void OracleParams::validate() const {
  if (restarts == 0 || max_iters == 0) {
    throw PreconditionError("oracle restarts and max_iters must be at least 1");
  }
  if (!(unitary_tol > 0) || !(support_floor > 0) || !(zero_tol > 0)) {
    throw PreconditionError("oracle tolerances must be positive");
  }
  if (!(support_floor > zero_tol)) {
    throw PreconditionError("oracle support_floor must exceed zero_tol");
  }
}

std::string_view verdict_kind(const Verdict& v) {
  struct {
    std::string_view operator()(const Infeasible&) const { return "infeasible"; }
    std::string_view operator()(const Feasible&) const { return "feasible"; }
    std::string_view operator()(const Unknown&) const { return "unknown"; }
  } visitor;
  return std::visit(visitor, v);
}

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw PreconditionError("nearest_unitary: matrix must be square and non-empty");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() <= kRankFloor) {
    throw PreconditionError("nearest_unitary: matrix is numerically rank-deficient");
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix pattern_projection(const ComplexMatrix& m, const Pattern& p, double floor, std::uint64_t seed) {
  if (m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(p.size())) {
    throw PreconditionError("pattern_projection: matrix and pattern sizes differ");
  }
  const std::size_t n = p.size();
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto r = static_cast<Eigen::Index>(i);
      const auto c = static_cast<Eigen::Index>(j);
      if (!p.at(i, j)) {
        out(r, c) = 0.0;
        continue;
      }
      const Complex z = m(r, c);
      const double mag = std::abs(z);
      if (mag >= floor) {
        out(r, c) = z;
      } else if (mag > 0.0) {
        out(r, c) = z * (floor / mag);
      } else {
        const double u = unit_interval(splitmix64(seed ^ splitmix64(i * n + j)));
        out(r, c) = std::polar(floor, 2.0 * std::numbers::pi * u);
      }
    }
  }
  return out;
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw PreconditionError("random_unitary: n must be >= 1");
  }
  const auto size = static_cast<Eigen::Index>(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < size; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) {
  return splitmix64(seed ^ splitmix64(0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(restart) + 1)));
}

Verdict decide(const Pattern& p, const OracleParams& params, Exec exec) {
  params.validate();
  if (const WellFormedness w = well_formed(p); !w) {
    throw PreconditionError("decide: pattern is not well-formed (zero row or column at index " +
                            std::to_string(w.offenders.front()) + ")");
  }
  const SqCheck sq = check_strongly_quadrangular(p, SqOptions{params.sq_cap});
  if (sq.status == SqStatus::violated) {
    return Infeasible{*sq.witness};
  }

  std::vector<RestartOutcome> outcomes(params.restarts);
  if (exec == Exec::serial) {
    for (std::size_t r = 0; r < params.restarts; ++r) {
      outcomes[r] = run_restart(p, params, r);
      if (outcomes[r].certificate) return assemble(outcomes, r + 1);
    }
    return assemble(outcomes, params.restarts);
  }

  // Chunks of one restart per thread; stop after the first chunk with a
  // success. The lowest successful index wins, as in the serial loop.
  const auto chunk = static_cast<std::size_t>(std::max(1, max_threads()));
  for (std::size_t begin = 0; begin < params.restarts; begin += chunk) {
    const std::size_t end = std::min(params.restarts, begin + chunk);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(begin); r < static_cast<std::ptrdiff_t>(end); ++r) {
      outcomes[static_cast<std::size_t>(r)] = run_restart(p, params, static_cast<std::size_t>(r));
    }
    for (std::size_t r = begin; r < end; ++r) {
      if (outcomes[r].certificate) return assemble(outcomes, r + 1);
    }
  }
  return assemble(outcomes, params.restarts);
}

}  // namespace unipat
