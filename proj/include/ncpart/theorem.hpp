#pragma once

// Free and boolean cumulants as weighted sums over connected and irreducible
// partitions, the closure-fiber sums behind them, and the counting
// corollaries for the Gaussian and Poisson laws.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncpart/cumulants.hpp"
#include "ncpart/parallel.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/scalar.hpp"

namespace ncpart {

/// Sum of v_π over one family of partitions of [n].
template <Ring R>
struct WeightedCount {
  R value;
  PartitionKind family;
  std::size_t n;
};

template <Ring R>
WeightedCount<R> weighted_count(PartitionKind family, std::size_t n, const Sequence<R>& weights) {
  if (n == 0 || n > weights.order()) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside 1.." + std::to_string(weights.order()));
  }
  R value = kernels::parallel_sum<R>(n, family, [&](const SetPartition& p) { return block_product(weights.values, p); });
  return {std::move(value), family, n};
}

/// c_n as the sum of κ_π over connected partitions of [n].
template <Ring R>
R free_from_classical(const Sequence<R>& kappa, std::size_t n) {
  detail::require_flavor(kappa.flavor, Flavor::classical, "free_from_classical");
  return weighted_count(PartitionKind::connected, n, kappa).value;
}

/// h_n as the sum of κ_π over irreducible partitions of [n].
template <Ring R>
R boolean_from_classical(const Sequence<R>& kappa, std::size_t n) {
  detail::require_flavor(kappa.flavor, Flavor::classical, "boolean_from_classical");
  return weighted_count(PartitionKind::irreducible, n, kappa).value;
}

/// h_n as the sum of c_π over noncrossing partitions with 1 and n in one block.
template <Ring R>
R boolean_from_free(const Sequence<R>& c, std::size_t n) {
  detail::require_flavor(c.flavor, Flavor::free, "boolean_from_free");
  return weighted_count(PartitionKind::nc_irreducible, n, c).value;
}

/// Sum of κ_σ over all σ whose noncrossing closure is π.
template <Ring R>
R c_tilde(const SetPartition& pi, const Sequence<R>& kappa) {
  detail::require_flavor(kappa.flavor, Flavor::classical, "c_tilde");
  if (!is_noncrossing(pi)) throw std::invalid_argument("c_tilde needs a noncrossing partition, got " + to_string(pi));
  if (pi.size() > kappa.order()) throw std::invalid_argument("cumulant sequence too short for " + to_string(pi));
  return kernels::parallel_sum<R>(pi.size(), PartitionKind::all, [&](const SetPartition& sigma) {
    // closure(σ) = π forces σ <= π; the cheap test goes first.
    if (!leq(sigma, pi) || closure(sigma) != pi) return R(0);
    return block_product(kappa.values, sigma);
  });
}

std::uint64_t count_connected(std::size_t n);
/// Throws std::invalid_argument for odd n.
std::uint64_t count_connected_pairings(std::size_t n);

/// Sum of λ^{|π|} over connected partitions π of [n].
Polynomial block_polynomial(std::size_t n);

/// Partial Dobinski sum e^{-1} sum_{k=0..terms} k^n / k!, in floating point.
double dobinski(std::size_t n, std::size_t terms);

/// Seeded classical cumulant sequence with entries p/q, |p| <= 100,
/// 1 <= q <= 100.
Sequence<Rational> random_classical(std::size_t order, std::uint64_t seed);

struct Check {
  std::string identity;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_equal() const;
};

/// For each trial t (seed + t) draws random classical cumulants, forms the
/// moments, and compares for n = 1..max_n:
///   free-connected          sum over connected κ_π vs NC-lattice c_n
///   boolean-irreducible     sum over irreducible κ_π vs interval-lattice h_n
///   boolean-nc-irreducible  sum over NC-irreducible c_π vs h_n
/// `inject_fault` perturbs the first left-hand side, to exercise the failure
/// path. Trials run in parallel; checks are reported in (trial, n) order.
VerifyReport verify(std::size_t max_n, std::size_t trials, std::uint64_t seed, bool inject_fault = false);

}  // namespace ncpart
